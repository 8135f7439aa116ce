// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdfqa/dataset.hpp"
#include "rdfqa/ordered_set.hpp"
#include "rdfqa/vocabulary.hpp"

namespace rdfqa {

enum class PropertyKind { ObjectProperty, DatatypeProperty, UnknownKind };

inline const char* propertyKindName(PropertyKind k) {
  switch (k) {
    case PropertyKind::ObjectProperty: return "ObjectProperty";
    case PropertyKind::DatatypeProperty: return "DatatypeProperty";
    default: return "UnknownKind";
  }
}

// Unordered pair stored with first < second.
using ClassPair = std::pair<std::string, std::string>;

inline ClassPair makeClassPair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

struct ClassPairHash {
  std::size_t operator()(const ClassPair& p) const noexcept {
    std::size_t seed = std::hash<std::string>{}(p.first);
    detail::hashCombine(seed, std::hash<std::string>{}(p.second));
    return seed;
  }
};

// Declared schema terms. Only explicit declarations count here; classes and
// properties that are merely used live in the InstanceIndex.
class SchemaIndex {
 public:
  const OrderedSet<std::string>& classes() const noexcept { return classes_; }
  const OrderedSet<std::string>& properties() const noexcept { return properties_; }
  const OrderedSet<std::string>& functional() const noexcept { return functional_; }
  const OrderedSet<std::string>& inverseFunctional() const noexcept { return inverseFunctional_; }
  const std::set<ClassPair>& disjointPairs() const noexcept { return disjointPairs_; }
  const Vocabulary& vocabulary() const noexcept { return vocabulary_; }

  bool hasClass(const std::string& iri) const { return classes_.contains(iri); }
  bool hasProperty(const std::string& iri) const { return properties_.contains(iri); }
  bool isFunctional(const std::string& iri) const { return functional_.contains(iri); }
  bool isInverseFunctional(const std::string& iri) const {
    return inverseFunctional_.contains(iri);
  }

  PropertyKind kindOf(const std::string& property) const {
    auto it = kinds_.find(property);
    return it == kinds_.end() ? PropertyKind::UnknownKind : it->second;
  }

  const std::vector<std::string>& domainOf(const std::string& property) const {
    return lookup(domainOf_, property);
  }
  const std::vector<std::string>& rangeOf(const std::string& property) const {
    return lookup(rangeOf_, property);
  }
  const std::unordered_map<std::string, std::vector<std::string>>& domains() const noexcept {
    return domainOf_;
  }
  const std::unordered_map<std::string, std::vector<std::string>>& ranges() const noexcept {
    return rangeOf_;
  }

  // Direct superclasses from rdfs:subClassOf.
  const std::vector<std::string>& superclassesOf(const std::string& cls) const {
    return lookup(subclassOf_, cls);
  }

  // Strict, transitive.
  bool isSubclassOf(const std::string& sub, const std::string& super) const {
    auto it = ancestors_.find(sub);
    return it != ancestors_.end() && it->second.count(super) > 0;
  }

  bool areDisjoint(const std::string& a, const std::string& b) const {
    auto it = disjointWith_.find(a);
    return it != disjointWith_.end() && it->second.count(b) > 0;
  }

  // Ranges that are datatype IRIs (xsd and the rdf/rdfs literal types).
  const std::vector<std::string>& datatypeRangesOf(const std::string& property) const {
    return lookup(datatypeRanges_, property);
  }

  // Ranges that are declared classes.
  const std::vector<std::string>& classRangesOf(const std::string& property) const {
    return lookup(classRanges_, property);
  }

 private:
  friend SchemaIndex buildSchemaIndex(const Dataset& d, const Vocabulary& vocabulary);

  static const std::vector<std::string>& lookup(
      const std::unordered_map<std::string, std::vector<std::string>>& m, const std::string& k) {
    static const std::vector<std::string> kEmpty;
    auto it = m.find(k);
    return it == m.end() ? kEmpty : it->second;
  }

  Vocabulary vocabulary_;
  OrderedSet<std::string> classes_;
  OrderedSet<std::string> properties_;
  std::unordered_map<std::string, PropertyKind> kinds_;
  std::unordered_map<std::string, std::vector<std::string>> domainOf_;
  std::unordered_map<std::string, std::vector<std::string>> rangeOf_;
  std::unordered_map<std::string, std::vector<std::string>> datatypeRanges_;
  std::unordered_map<std::string, std::vector<std::string>> classRanges_;
  OrderedSet<std::string> functional_;
  OrderedSet<std::string> inverseFunctional_;
  std::set<ClassPair> disjointPairs_;
  std::unordered_map<std::string, std::unordered_set<std::string>> disjointWith_;
  std::unordered_map<std::string, std::vector<std::string>> subclassOf_;
  std::unordered_map<std::string, std::unordered_set<std::string>> ancestors_;
};

inline SchemaIndex buildSchemaIndex(const Dataset& d, const Vocabulary& vocabulary = {}) {
  SchemaIndex s;
  s.vocabulary_ = vocabulary;

  std::unordered_set<std::string> typedObject;
  std::unordered_set<std::string> typedDatatype;
  std::vector<ClassPair> declaredDisjoint;

  auto addUnique = [](std::vector<std::string>& v, const std::string& x) {
    for (const auto& e : v) {
      if (e == x) return;
    }
    v.push_back(x);
  };
  auto addClass = [&](const std::string& iri) {
    if (!vocabulary.isBuiltin(iri)) s.classes_.insert(iri);
  };

  for (const auto& t : d.triples()) {
    const auto* subject = asIri(t.subject);
    if (subject == nullptr || vocabulary.isBuiltin(subject->value)) continue;
    const std::string& sub = subject->value;
    const std::string& p = t.predicate.value;
    const auto* object = asIri(t.object);

    if (p == vocab::rdfType) {
      if (object == nullptr) continue;
      const std::string& o = object->value;
      if (o == vocab::rdfsClass || o == vocab::owlClass) {
        addClass(sub);
      } else if (o == vocab::rdfProperty) {
        s.properties_.insert(sub);
      } else if (o == vocab::owlObjectProperty) {
        s.properties_.insert(sub);
        typedObject.insert(sub);
      } else if (o == vocab::owlDatatypeProperty) {
        s.properties_.insert(sub);
        typedDatatype.insert(sub);
      } else if (o == vocab::owlFunctionalProperty) {
        s.properties_.insert(sub);
        s.functional_.insert(sub);
      } else if (o == vocab::owlInverseFunctionalProperty) {
        s.properties_.insert(sub);
        s.inverseFunctional_.insert(sub);
      }
    } else if (p == vocab::rdfsSubClassOf) {
      addClass(sub);
      if (object != nullptr && !vocabulary.isBuiltin(object->value)) {
        addUnique(s.subclassOf_[sub], object->value);
      }
    } else if (p == vocab::owlDisjointWith || p == vocab::owlComplementOf) {
      addClass(sub);
      if (object != nullptr && !vocabulary.isBuiltin(object->value) && object->value != sub) {
        declaredDisjoint.push_back(makeClassPair(sub, object->value));
      }
    } else if (p == vocab::rdfsDomain || p == vocab::rdfsRange) {
      s.properties_.insert(sub);
      if (object == nullptr) continue;
      addUnique(p == vocab::rdfsDomain ? s.domainOf_[sub] : s.rangeOf_[sub], object->value);
      if (!isDatatypeIri(object->value)) addClass(object->value);
    }
  }

  for (const auto& prop : s.properties_) {
    PropertyKind kind = PropertyKind::UnknownKind;
    if (typedDatatype.count(prop)) {
      kind = PropertyKind::DatatypeProperty;
    } else if (typedObject.count(prop)) {
      kind = PropertyKind::ObjectProperty;
    } else {
      for (const auto& r : s.rangeOf(prop)) {
        if (isDatatypeIri(r)) {
          kind = PropertyKind::DatatypeProperty;
          break;
        }
        if (s.classes_.contains(r)) kind = PropertyKind::ObjectProperty;
      }
    }
    s.kinds_[prop] = kind;
  }

  for (const auto& [prop, ranges] : s.rangeOf_) {
    for (const auto& r : ranges) {
      if (isDatatypeIri(r)) {
        s.datatypeRanges_[prop].push_back(r);
      } else if (s.classes_.contains(r)) {
        s.classRanges_[prop].push_back(r);
      }
    }
  }

  // Transitive superclass sets by depth-first walk; cycles terminate on the
  // visited set.
  for (const auto& [cls, _] : s.subclassOf_) {
    auto& anc = s.ancestors_[cls];
    std::vector<std::string> stack = s.subclassOf_.at(cls);
    while (!stack.empty()) {
      std::string cur = std::move(stack.back());
      stack.pop_back();
      if (cur == cls || !anc.insert(cur).second) continue;
      for (const auto& up : s.superclassesOf(cur)) stack.push_back(up);
    }
  }

  std::unordered_map<std::string, std::vector<std::string>> descendants;
  for (const auto& [cls, anc] : s.ancestors_) {
    for (const auto& a : anc) descendants[a].push_back(cls);
  }
  auto selfAndBelow = [&](const std::string& c) {
    std::vector<std::string> out{c};
    auto it = descendants.find(c);
    if (it != descendants.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  };

  for (const auto& [a, b] : declaredDisjoint) {
    const auto lowA = selfAndBelow(a);
    const auto lowB = selfAndBelow(b);
    for (const auto& x : lowA) {
      for (const auto& y : lowB) {
        if (x == y) continue;
        s.disjointPairs_.insert(makeClassPair(x, y));
        s.disjointWith_[x].insert(y);
        s.disjointWith_[y].insert(x);
      }
    }
  }
  return s;
}

}  // namespace rdfqa
