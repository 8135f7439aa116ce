// SPDX-License-Identifier: Apache-2.0
#pragma once

// The ten intrinsic quality metrics. Each is a ratio of undesirable outcomes
// over total outcomes, in [0, 1], computed under the closed world
// assumption from the declared schema and the instance data.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "rdfqa/dataset.hpp"
#include "rdfqa/dictionary.hpp"
#include "rdfqa/instance_index.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/schema_index.hpp"
#include "rdfqa/version.hpp"
#include "rdfqa/xsd.hpp"

namespace rdfqa {

enum class MetricId : std::uint8_t {
  M1_MissVlu,
  M2_OutVlu,
  M3_MssplPrpVlu,
  M4_UndClsPrp,
  M5_DsjCls,
  M6_IncPrpVlu,
  M7_FP,
  M8_IFP,
  M9_ImDT,
  M10_SmlCls,
};

inline constexpr std::array<MetricId, 10> kAllMetrics{
    MetricId::M1_MissVlu,   MetricId::M2_OutVlu,    MetricId::M3_MssplPrpVlu,
    MetricId::M4_UndClsPrp, MetricId::M5_DsjCls,    MetricId::M6_IncPrpVlu,
    MetricId::M7_FP,        MetricId::M8_IFP,       MetricId::M9_ImDT,
    MetricId::M10_SmlCls};

inline std::string_view metricCode(MetricId id) {
  static constexpr std::array<std::string_view, 10> kCodes{"M1", "M2", "M3", "M4", "M5",
                                                           "M6", "M7", "M8", "M9", "M10"};
  return kCodes[static_cast<std::size_t>(id)];
}

inline std::string_view metricName(MetricId id) {
  static constexpr std::array<std::string_view, 10> kNames{
      "Miss_Vlu", "Out_Vlu", "Msspl_Prp_Vlu", "Und_Cls_Prp", "Dsj_Cls",
      "Inc_Prp_Vlu", "FP", "IFP", "Im_DT", "Sml_Cls"};
  return kNames[static_cast<std::size_t>(id)];
}

// Accepts "M7", "m7" or the short name ("FP", case-insensitive).
inline std::optional<MetricId> parseMetricId(std::string_view text) {
  const auto lower = toLowerAscii(text);
  for (const auto id : kAllMetrics) {
    if (lower == toLowerAscii(metricCode(id)) || lower == toLowerAscii(metricName(id))) return id;
  }
  return std::nullopt;
}

struct TripleRef {
  std::size_t index = 0;
  friend bool operator==(const TripleRef&, const TripleRef&) = default;
};

// A flagged triple (by document position) or a flagged IRI.
using Offender = std::variant<TripleRef, std::string>;

struct MetricValue {
  MetricId id = MetricId::M1_MissVlu;
  double value = 0.0;
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  bool clamped = false;
  bool degenerate = false;  // denominator was zero
  std::vector<Offender> offenders;
};

struct DatasetCounts {
  std::uint64_t triples = 0;
  std::uint64_t instances = 0;
  std::uint64_t classes = 0;
  std::uint64_t properties = 0;
  friend bool operator==(const DatasetCounts&, const DatasetCounts&) = default;
};

struct MetricReport {
  std::string datasetId;
  DatasetCounts counts;
  std::uint64_t duplicateCount = 0;
  std::map<MetricId, MetricValue> metrics;
  std::optional<std::string> dictionaryId;
  std::string toolVersion = kToolVersion;
  std::vector<std::string> flags;

  const MetricValue* find(MetricId id) const {
    auto it = metrics.find(id);
    return it == metrics.end() ? nullptr : &it->second;
  }

  std::vector<MetricId> selection() const {
    std::vector<MetricId> ids;
    for (const auto& [id, _] : metrics) ids.push_back(id);
    return ids;
  }
};

inline constexpr std::size_t kDefaultOffenderCap = 50;

namespace detail {

inline MetricValue ratioValue(MetricId id, std::uint64_t numerator, std::uint64_t denominator) {
  MetricValue v;
  v.id = id;
  v.numerator = numerator;
  v.denominator = denominator;
  if (denominator == 0) {
    v.degenerate = true;
    return v;
  }
  v.value = static_cast<double>(numerator) / static_cast<double>(denominator);
  if (v.value > 1.0) {
    v.value = 1.0;
    v.clamped = true;
  }
  return v;
}

inline void keepFirst(std::vector<std::size_t>& indices, std::size_t cap) {
  std::sort(indices.begin(), indices.end());
  if (indices.size() > cap) indices.resize(cap);
}

inline std::vector<Offender> asOffenders(const std::vector<std::size_t>& indices) {
  std::vector<Offender> out;
  out.reserve(indices.size());
  for (auto i : indices) out.emplace_back(TripleRef{i});
  return out;
}

// Type of a term as compared by the inconsistent-values check. Plain literals
// are xsd:string and language-tagged ones rdf:langString.
inline std::string_view termTypeKey(const Term& t) {
  if (isIri(t)) return "<iri>";
  if (isBlank(t)) return "<bnode>";
  const auto& lit = std::get<Literal>(t);
  if (lit.datatype) return *lit.datatype;
  if (lit.language) return vocab::rdfLangString;
  return vocab::xsdString;
}

// Whether a literal's datatype annotation satisfies a declared datatype range.
inline bool datatypeAccepts(const Literal& lit, const std::string& range) {
  if (range == vocab::rdfsLiteral) return true;
  if (lit.datatype) return *lit.datatype == range;
  if (lit.language) return range == vocab::rdfLangString || range == vocab::xsdString;
  return range == vocab::xsdString;
}

}  // namespace detail

// M1: 1 - (sum over declared properties of their usage count) / (|Cls| * |Prp|).
// Offenders are the declared properties never used.
inline MetricValue m1_missingPropertyValues(const SchemaIndex& s, const InstanceIndex& ii,
                                            std::size_t offenderCap = kDefaultOffenderCap) {
  MetricValue v;
  v.id = MetricId::M1_MissVlu;
  std::uint64_t usage = 0;
  for (const auto& p : s.properties()) {
    const auto n = ii.triplesUsing(p).size();
    usage += n;
    if (n == 0 && v.offenders.size() < offenderCap) v.offenders.emplace_back(p);
  }
  v.numerator = usage;
  v.denominator = static_cast<std::uint64_t>(s.classes().size()) * s.properties().size();
  if (v.denominator == 0) {
    v.degenerate = true;
    return v;
  }
  const double ratio = static_cast<double>(v.numerator) / static_cast<double>(v.denominator);
  if (ratio > 1.0) {
    v.clamped = true;
    v.value = 0.0;
  } else {
    v.value = 1.0 - ratio;
  }
  return v;
}

// Out-of-range flag for one triple. Object properties: an IRI object with at
// least one asserted class, none of which is (a subclass of) any declared
// class range. Datatype properties: a literal whose lexical form is invalid
// for every declared datatype range; unknown datatypes never flag.
inline bool isOutOfRange(const Triple& t, const SchemaIndex& s, const InstanceIndex& ii) {
  const auto& p = t.predicate.value;
  if (!s.hasProperty(p)) return false;
  switch (s.kindOf(p)) {
    case PropertyKind::ObjectProperty: {
      const auto* o = asIri(t.object);
      if (o == nullptr) return false;
      const auto& ranges = s.classRangesOf(p);
      if (ranges.empty()) return false;
      const auto& classes = ii.classesOf(o->value);
      if (classes.empty()) return false;
      for (const auto& r : ranges) {
        for (const auto& c : classes) {
          if (c == r || s.isSubclassOf(c, r)) return false;
        }
      }
      return true;
    }
    case PropertyKind::DatatypeProperty: {
      const auto* lit = asLiteral(t.object);
      if (lit == nullptr) return false;
      const auto& ranges = s.datatypeRangesOf(p);
      if (ranges.empty()) return false;
      for (const auto& r : ranges) {
        if (!xsd::isCheckable(r) || xsd::isValidLexical(lit->lexical, r)) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

// M2: triples whose object is outside the property's declared range, over |Trp|.
inline MetricValue m2_outOfRangeValues(const Dataset& d, const SchemaIndex& s,
                                       const InstanceIndex& ii,
                                       std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  const auto triples = d.triples();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!isOutOfRange(triples[i], s, ii)) continue;
    ++count;
    if (offenders.size() < offenderCap) offenders.push_back(i);
  }
  auto v = detail::ratioValue(MetricId::M2_OutVlu, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// M3: triples whose natural-language literal holds a token missing from the
// dictionary, over |Trp|.
inline MetricValue m3_misspelledValues(const Dataset& d, const Dictionary& dict,
                                       std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  const auto triples = d.triples();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto* lit = asLiteral(triples[i].object);
    if (lit == nullptr || !isMisspelled(*lit, dict)) continue;
    ++count;
    if (offenders.size() < offenderCap) offenders.push_back(i);
  }
  auto v = detail::ratioValue(MetricId::M3_MssplPrpVlu, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// Undeclared-class plus undeclared-property contributions of one triple.
inline int undefinedTermCount(const Triple& t, const SchemaIndex& s) {
  const auto& vocabulary = s.vocabulary();
  const auto& p = t.predicate.value;
  int n = 0;
  if (p == vocab::rdfType) {
    const auto* o = asIri(t.object);
    if (o != nullptr && !vocabulary.isBuiltin(o->value) && !s.hasClass(o->value)) ++n;
  } else if (!vocabulary.isBuiltin(p) && !s.hasProperty(p)) {
    ++n;
  }
  return n;
}

// M4: uses of undeclared classes (as rdf:type objects) and undeclared
// properties (as predicates), over |Trp|; clamped at 1.
inline MetricValue m4_undefinedClassesProperties(const Dataset& d, const SchemaIndex& s,
                                                 const InstanceIndex& ii,
                                                 std::size_t offenderCap = kDefaultOffenderCap) {
  (void)ii;
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  const auto triples = d.triples();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const int n = undefinedTermCount(triples[i], s);
    if (n == 0) continue;
    count += static_cast<std::uint64_t>(n);
    if (offenders.size() < offenderCap) offenders.push_back(i);
  }
  auto v = detail::ratioValue(MetricId::M4_UndClsPrp, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

inline bool isInDisjointClasses(const std::string& instance, const SchemaIndex& s,
                                const InstanceIndex& ii) {
  const auto& classes = ii.classesOf(instance);
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (s.areDisjoint(classes[a], classes[b])) return true;
    }
  }
  return false;
}

// M5: instances that belong to two disjoint classes, over |Ins|. Each
// instance counts once however many pairs it violates.
inline MetricValue m5_disjointClassMembership(const SchemaIndex& s, const InstanceIndex& ii,
                                              std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<Offender> offenders;
  if (!s.disjointPairs().empty()) {
    for (const auto& instance : ii.instances()) {
      if (!isInDisjointClasses(instance, s, ii)) continue;
      ++count;
      if (offenders.size() < offenderCap) offenders.emplace_back(instance);
    }
  }
  auto v = detail::ratioValue(MetricId::M5_DsjCls, count, ii.instances().size());
  v.offenders = std::move(offenders);
  return v;
}

// M6: within each (subject, predicate) group other than rdf:type, objects of
// different term types conflict. A group with any conflict involves all its
// triples and contributes (size - 1), so one bad pair adds exactly 1.
inline MetricValue m6_inconsistentPropertyValues(const Dataset& d, const InstanceIndex& ii,
                                                 std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  const auto triples = d.triples();
  std::unordered_map<std::string, std::vector<std::size_t>> bySubject;
  for (const auto& [predicate, indices] : ii.triplesByPredicate()) {
    if (predicate == vocab::rdfType || indices.size() < 2) continue;
    bySubject.clear();
    for (auto i : indices) bySubject[toNTriples(triples[i].subject)].push_back(i);
    for (const auto& [_, group] : bySubject) {
      if (group.size() < 2) continue;
      const auto firstType = detail::termTypeKey(triples[group.front()].object);
      const bool conflict = std::any_of(group.begin() + 1, group.end(), [&](std::size_t i) {
        return detail::termTypeKey(triples[i].object) != firstType;
      });
      if (!conflict) continue;
      count += group.size() - 1;
      offenders.insert(offenders.end(), group.begin() + 1, group.end());
    }
  }
  detail::keepFirst(offenders, offenderCap);
  auto v = detail::ratioValue(MetricId::M6_IncPrpVlu, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// M7: for each (subject, functional property) with k distinct objects, k - 1
// violations; over |Trp|.
inline MetricValue m7_functionalPropertyViolations(
    const Dataset& d, const SchemaIndex& s, std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  if (!s.functional().empty()) {
    const auto triples = d.triples();
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& p = triples[i].predicate.value;
      if (!s.isFunctional(p)) continue;
      std::string key = toNTriples(triples[i].subject);
      key += ' ';
      key += p;
      groups[std::move(key)].push_back(i);
    }
    // Triples are unique, so a group's objects are pairwise distinct.
    for (const auto& [_, group] : groups) {
      if (group.size() < 2) continue;
      count += group.size() - 1;
      offenders.insert(offenders.end(), group.begin() + 1, group.end());
    }
  }
  detail::keepFirst(offenders, offenderCap);
  auto v = detail::ratioValue(MetricId::M7_FP, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// Grouping key for the inverse-functional check: empty-string literals of
// any datatype or language share one group per property.
inline std::string inverseFunctionalObjectKey(const Term& object) {
  if (const auto* lit = asLiteral(object); lit != nullptr && lit->lexical.empty()) return "\"\"";
  return toNTriples(object);
}

// M8: for each (inverse-functional property, object) with k distinct
// subjects, k - 1 violations; over |Trp|.
inline MetricValue m8_inverseFunctionalViolations(
    const Dataset& d, const SchemaIndex& s, std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  if (!s.inverseFunctional().empty()) {
    const auto triples = d.triples();
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& p = triples[i].predicate.value;
      if (!s.isInverseFunctional(p)) continue;
      std::string key = p;
      key += ' ';
      key += inverseFunctionalObjectKey(triples[i].object);
      groups[std::move(key)].push_back(i);
    }
    std::unordered_set<std::string> subjects;
    for (const auto& [_, group] : groups) {
      if (group.size() < 2) continue;
      subjects.clear();
      for (auto i : group) {
        if (!subjects.insert(toNTriples(triples[i].subject)).second) continue;
        if (subjects.size() > 1) offenders.push_back(i);
      }
      count += subjects.size() - 1;
    }
  }
  detail::keepFirst(offenders, offenderCap);
  auto v = detail::ratioValue(MetricId::M8_IFP, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// Whether a triple's literal carries a datatype tag that none of the
// property's declared datatype ranges accepts.
inline bool hasImproperDatatype(const Triple& t, const SchemaIndex& s) {
  const auto& p = t.predicate.value;
  if (s.kindOf(p) != PropertyKind::DatatypeProperty) return false;
  const auto* lit = asLiteral(t.object);
  if (lit == nullptr) return false;
  const auto& ranges = s.datatypeRangesOf(p);
  if (ranges.empty()) return false;
  return std::none_of(ranges.begin(), ranges.end(),
                      [&](const std::string& r) { return detail::datatypeAccepts(*lit, r); });
}

// M9: datatype-property literals whose datatype tag differs from the declared
// range, over |Trp|. Compares tags only; lexical validity is M2's concern.
inline MetricValue m9_improperDatatype(const Dataset& d, const SchemaIndex& s,
                                       std::size_t offenderCap = kDefaultOffenderCap) {
  std::uint64_t count = 0;
  std::vector<std::size_t> offenders;
  const auto triples = d.triples();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!hasImproperDatatype(triples[i], s)) continue;
    ++count;
    if (offenders.size() < offenderCap) offenders.push_back(i);
  }
  auto v = detail::ratioValue(MetricId::M9_ImDT, count, d.size());
  v.offenders = detail::asOffenders(offenders);
  return v;
}

// M10: declared classes with a non-empty instance set equal to that of
// another declared class, neither being a subclass of the other; over |Cls|.
// Both members of a similar pair count.
inline MetricValue m10_similarClasses(const SchemaIndex& s, const InstanceIndex& ii,
                                      std::size_t offenderCap = kDefaultOffenderCap) {
  std::map<std::vector<std::string>, std::vector<std::string>> byInstanceSet;
  for (const auto& c : s.classes()) {
    auto members = ii.membersOf(c);
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    byInstanceSet[std::move(members)].push_back(c);
  }
  std::unordered_set<std::string> similar;
  for (const auto& [_, group] : byInstanceSet) {
    if (group.size() < 2) continue;
    for (const auto& c : group) {
      for (const auto& other : group) {
        if (other == c || s.isSubclassOf(c, other) || s.isSubclassOf(other, c)) continue;
        similar.insert(c);
        break;
      }
    }
  }
  std::vector<Offender> offenders;
  for (const auto& c : s.classes()) {
    if (offenders.size() >= offenderCap) break;
    if (similar.count(c)) offenders.emplace_back(c);
  }
  auto v = detail::ratioValue(MetricId::M10_SmlCls, similar.size(), s.classes().size());
  v.offenders = std::move(offenders);
  return v;
}

struct AssessOptions {
  std::vector<MetricId> selection;  // empty: all ten
  std::size_t offenderCap = kDefaultOffenderCap;
  bool parallel = false;
  Vocabulary vocabulary;
};

inline MetricValue evaluateMetric(MetricId id, const Dataset& d, const SchemaIndex& s,
                                  const InstanceIndex& ii, const Dictionary& dict,
                                  std::size_t cap) {
  switch (id) {
    case MetricId::M1_MissVlu: return m1_missingPropertyValues(s, ii, cap);
    case MetricId::M2_OutVlu: return m2_outOfRangeValues(d, s, ii, cap);
    case MetricId::M3_MssplPrpVlu: return m3_misspelledValues(d, dict, cap);
    case MetricId::M4_UndClsPrp: return m4_undefinedClassesProperties(d, s, ii, cap);
    case MetricId::M5_DsjCls: return m5_disjointClassMembership(s, ii, cap);
    case MetricId::M6_IncPrpVlu: return m6_inconsistentPropertyValues(d, ii, cap);
    case MetricId::M7_FP: return m7_functionalPropertyViolations(d, s, cap);
    case MetricId::M8_IFP: return m8_inverseFunctionalViolations(d, s, cap);
    case MetricId::M9_ImDT: return m9_improperDatatype(d, s, cap);
    case MetricId::M10_SmlCls: return m10_similarClasses(s, ii, cap);
  }
  return {};
}

// Evaluates the selected metrics over prebuilt indices.
inline MetricReport assessIndexed(const Dataset& d, const SchemaIndex& s, const InstanceIndex& ii,
                                  const Dictionary& dict, const AssessOptions& options = {}) {
  std::vector<MetricId> selection = options.selection;
  if (selection.empty()) selection.assign(kAllMetrics.begin(), kAllMetrics.end());
  std::sort(selection.begin(), selection.end());
  selection.erase(std::unique(selection.begin(), selection.end()), selection.end());

  MetricReport report;
  report.datasetId = d.id();
  report.counts = {d.size(), ii.instances().size(), s.classes().size(), s.properties().size()};
  report.duplicateCount = d.duplicateCount();
  if (!dict.id().empty()) report.dictionaryId = dict.id();

  std::vector<MetricValue> values(selection.size());
  if (options.parallel) {
    std::vector<std::future<MetricValue>> pending;
    pending.reserve(selection.size());
    for (const auto id : selection) {
      pending.push_back(std::async(std::launch::async, [&, id] {
        return evaluateMetric(id, d, s, ii, dict, options.offenderCap);
      }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) values[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < selection.size(); ++i) {
      values[i] = evaluateMetric(selection[i], d, s, ii, dict, options.offenderCap);
    }
  }

  if (d.duplicateCount() > 0) {
    report.flags.push_back("DuplicateTriplesDropped: " + std::to_string(d.duplicateCount()));
  }
  const bool usesDictionary =
      std::find(selection.begin(), selection.end(), MetricId::M3_MssplPrpVlu) != selection.end();
  if (usesDictionary && dict.empty()) report.flags.push_back("EmptyDictionary");
  for (auto& v : values) {
    if (v.degenerate) {
      report.flags.push_back("DegenerateDenominator: " + std::string(metricCode(v.id)));
    }
    if (v.clamped) report.flags.push_back("Clamped: " + std::string(metricCode(v.id)));
    report.metrics.emplace(v.id, std::move(v));
  }
  return report;
}

// Builds the indices once and evaluates the selected metrics (all ten by default).
inline MetricReport assess(const Dataset& d, const Dictionary& dict,
                           const AssessOptions& options = {}) {
  const auto schema = buildSchemaIndex(d, options.vocabulary);
  const auto instances = buildInstanceIndex(d, schema);
  return assessIndexed(d, schema, instances, dict, options);
}

}  // namespace rdfqa
