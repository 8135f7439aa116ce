// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rdfqa {

// Seeded generator whose outputs are identical on every platform. The
// standard distributions are implementation-defined, so bounded draws use
// rejection sampling on the raw 64-bit engine output.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }

  bool coin() { return below(2) == 1; }

  char lowercaseLetter() { return static_cast<char>('a' + below(26)); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rdfqa
