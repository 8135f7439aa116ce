// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rdfqa {

// Set that iterates in first-insertion order. Lookups are hashed.
template <typename T, typename Hash = std::hash<T>>
class OrderedSet {
 public:
  using const_iterator = typename std::vector<T>::const_iterator;

  // Returns true when the value was not present before.
  bool insert(const T& value) {
    auto [it, inserted] = positions_.try_emplace(value, items_.size());
    if (inserted) items_.push_back(value);
    return inserted;
  }

  bool contains(const T& value) const { return positions_.find(value) != positions_.end(); }

  std::optional<std::size_t> position(const T& value) const {
    auto it = positions_.find(value);
    if (it == positions_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<T>& items() const noexcept { return items_; }

  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

 private:
  std::vector<T> items_;
  std::unordered_map<T, std::size_t, Hash> positions_;
};

}  // namespace rdfqa
