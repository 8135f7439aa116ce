// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdfqa/dataset.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/ordered_set.hpp"
#include "rdfqa/schema_index.hpp"

namespace rdfqa {

// Usage side of a dataset: class membership and triples grouped by predicate
// and by rdf:type object. All lists are in document order.
class InstanceIndex {
 public:
  const OrderedSet<std::string>& instances() const noexcept { return instances_; }

  const std::vector<std::string>& classesOf(const std::string& instance) const {
    return lookup(classesOf_, instance);
  }
  const std::vector<std::string>& membersOf(const std::string& cls) const {
    return lookup(membersOf_, cls);
  }
  const std::vector<std::size_t>& triplesUsing(const std::string& predicate) const {
    return lookup(triplesByPredicate_, predicate);
  }
  // rdf:type triples keyed by the N-Triples form of their object.
  const std::vector<std::size_t>& typeTriplesWithObject(const std::string& objectKey) const {
    return lookup(typeObjectTriples_, objectKey);
  }

  const std::unordered_map<std::string, std::vector<std::string>>& membership() const noexcept {
    return membersOf_;
  }
  const std::unordered_map<std::string, std::vector<std::size_t>>& triplesByPredicate()
      const noexcept {
    return triplesByPredicate_;
  }
  const std::unordered_map<std::string, std::vector<std::size_t>>& typeObjectTriples()
      const noexcept {
    return typeObjectTriples_;
  }

 private:
  friend InstanceIndex buildInstanceIndex(const Dataset& d, const SchemaIndex& s);

  template <typename V>
  static const V& lookup(const std::unordered_map<std::string, V>& m, const std::string& k) {
    static const V kEmpty;
    auto it = m.find(k);
    return it == m.end() ? kEmpty : it->second;
  }

  OrderedSet<std::string> instances_;
  std::unordered_map<std::string, std::vector<std::string>> classesOf_;
  std::unordered_map<std::string, std::vector<std::string>> membersOf_;
  std::unordered_map<std::string, std::vector<std::size_t>> triplesByPredicate_;
  std::unordered_map<std::string, std::vector<std::size_t>> typeObjectTriples_;
};

// Membership comes from (s rdf:type o) with s an IRI and o a non-builtin IRI.
// Blank node subjects are never instances.
inline InstanceIndex buildInstanceIndex(const Dataset& d, const SchemaIndex& s) {
  InstanceIndex ii;
  const auto& vocabulary = s.vocabulary();
  const auto triples = d.triples();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    ii.triplesByPredicate_[t.predicate.value].push_back(i);
    if (t.predicate.value != vocab::rdfType) continue;
    ii.typeObjectTriples_[toNTriples(t.object)].push_back(i);
    const auto* subject = asIri(t.subject);
    const auto* object = asIri(t.object);
    if (subject == nullptr || object == nullptr || vocabulary.isBuiltin(object->value)) continue;
    if (vocabulary.isBuiltin(subject->value)) continue;
    ii.instances_.insert(subject->value);
    // Triples are unique, so each (instance, class) pair shows up once.
    ii.classesOf_[subject->value].push_back(object->value);
    ii.membersOf_[object->value].push_back(subject->value);
  }
  return ii;
}

}  // namespace rdfqa
