// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded defect injection. Fourteen heuristics, each aimed at one metric,
// run in a fixed order over a single random stream and log every edit so
// the contaminated dataset can be rebuilt from the original.

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdfqa/dataset.hpp"
#include "rdfqa/dictionary.hpp"
#include "rdfqa/error.hpp"
#include "rdfqa/instance_index.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/rng.hpp"
#include "rdfqa/schema_index.hpp"
#include "rdfqa/version.hpp"
#include "rdfqa/xsd.hpp"

namespace rdfqa {

enum class HeuristicId : std::uint8_t { H1, H2, H3, H4, H5, H6, H7, H8, H9, H10, H11, H12, H13, H14 };

inline constexpr std::array<HeuristicId, 14> kAllHeuristics{
    HeuristicId::H1,  HeuristicId::H2,  HeuristicId::H3,  HeuristicId::H4,  HeuristicId::H5,
    HeuristicId::H6,  HeuristicId::H7,  HeuristicId::H8,  HeuristicId::H9,  HeuristicId::H10,
    HeuristicId::H11, HeuristicId::H12, HeuristicId::H13, HeuristicId::H14};

inline std::string heuristicCode(HeuristicId h) {
  return "H" + std::to_string(static_cast<int>(h) + 1);
}

inline std::optional<HeuristicId> parseHeuristicId(std::string_view text) {
  for (const auto h : kAllHeuristics) {
    if (text == heuristicCode(h) || (text.size() > 1 && text[0] == 'h' &&
                                     text.substr(1) == heuristicCode(h).substr(1))) {
      return h;
    }
  }
  return std::nullopt;
}

// The metric each heuristic is meant to degrade.
inline MetricId targetMetric(HeuristicId h) {
  static constexpr std::array<MetricId, 14> kTargets{
      MetricId::M1_MissVlu,     MetricId::M1_MissVlu,   MetricId::M2_OutVlu,
      MetricId::M3_MssplPrpVlu, MetricId::M3_MssplPrpVlu, MetricId::M4_UndClsPrp,
      MetricId::M4_UndClsPrp,   MetricId::M5_DsjCls,    MetricId::M5_DsjCls,
      MetricId::M6_IncPrpVlu,   MetricId::M7_FP,        MetricId::M8_IFP,
      MetricId::M9_ImDT,        MetricId::M10_SmlCls};
  return kTargets[static_cast<std::size_t>(h)];
}

enum class EditAction : std::uint8_t { AddTriple, RemoveTriple, RewriteTriple, AddAxiom, RemoveAxiom };

inline std::string_view editActionName(EditAction a) {
  static constexpr std::array<std::string_view, 5> kNames{
      "AddTriple", "RemoveTriple", "RewriteTriple", "AddAxiom", "RemoveAxiom"};
  return kNames[static_cast<std::size_t>(a)];
}

inline std::optional<EditAction> parseEditAction(std::string_view text) {
  for (int i = 0; i < 5; ++i) {
    const auto a = static_cast<EditAction>(i);
    if (text == editActionName(a)) return a;
  }
  return std::nullopt;
}

struct ContaminationPlan {
  std::string datasetId;
  std::uint64_t seed = 0;
  std::map<HeuristicId, std::uint64_t> intensities;

  std::uint64_t intensity(HeuristicId h) const {
    auto it = intensities.find(h);
    return it == intensities.end() ? 0 : it->second;
  }
};

struct Edit {
  HeuristicId heuristic = HeuristicId::H1;
  EditAction action = EditAction::AddTriple;
  std::optional<Triple> before;
  std::optional<Triple> after;

  friend bool operator==(const Edit&, const Edit&) = default;
};

inline constexpr std::string_view kContaminationNamespace = "urn:rdfqa:contam:";

struct ContaminationManifest {
  ContaminationPlan plan;
  std::string datasetId;
  std::string toolVersion = kToolVersion;
  std::string iriNamespace = std::string(kContaminationNamespace);
  std::vector<Edit> edits;
  std::map<HeuristicId, std::uint64_t> achieved;
  std::vector<std::string> warnings;
};

struct ContaminationResult {
  Dataset dataset;
  ContaminationManifest manifest;
};

// Schema triples: class/property declarations and axioms.
inline bool isSchemaTriple(const Triple& t) {
  const auto& p = t.predicate.value;
  if (isAxiomPredicate(p)) return true;
  if (p != vocab::rdfType) return false;
  const auto* o = asIri(t.object);
  if (o == nullptr) return false;
  const auto& v = o->value;
  return v == vocab::rdfsClass || v == vocab::owlClass || v == vocab::rdfProperty ||
         v == vocab::owlObjectProperty || v == vocab::owlDatatypeProperty ||
         v == vocab::owlFunctionalProperty || v == vocab::owlInverseFunctionalProperty;
}

// Triple sequence under edit. Removal leaves a hole so positions of the
// remaining triples, and thus document order, never shift.
class EditableTriples {
 public:
  explicit EditableTriples(const Dataset& d) {
    slots_.reserve(d.size());
    for (const auto& t : d.triples()) {
      position_.emplace(t, slots_.size());
      slots_.emplace_back(t);
    }
  }

  bool contains(const Triple& t) const { return position_.count(t) > 0; }
  std::size_t size() const noexcept { return position_.size(); }

  bool add(const Triple& t) {
    if (!position_.emplace(t, slots_.size()).second) return false;
    slots_.emplace_back(t);
    return true;
  }

  bool remove(const Triple& t) {
    auto it = position_.find(t);
    if (it == position_.end()) return false;
    slots_[it->second].reset();
    position_.erase(it);
    return true;
  }

  bool rewrite(const Triple& before, const Triple& after) {
    auto it = position_.find(before);
    if (it == position_.end() || position_.count(after) > 0) return false;
    const auto slot = it->second;
    position_.erase(it);
    slots_[slot] = after;
    position_.emplace(after, slot);
    return true;
  }

  template <typename F>
  void forEach(F&& f) const {
    for (const auto& slot : slots_) {
      if (slot) f(*slot);
    }
  }

  Dataset toDataset(const std::string& id, Format format = Format::NTriples) const {
    std::vector<Triple> live;
    live.reserve(position_.size());
    forEach([&](const Triple& t) { live.push_back(t); });
    return Dataset(id, std::move(live), format);
  }

 private:
  std::vector<std::optional<Triple>> slots_;
  std::unordered_map<Triple, std::size_t, TripleHash> position_;
};

namespace detail {

// IRIs in the reserved namespace that are absent from the source dataset.
class FreshIris {
 public:
  explicit FreshIris(const Dataset& d) {
    auto note = [&](const Term& t) {
      if (const auto* i = asIri(t)) used_.insert(i->value);
    };
    for (const auto& t : d.triples()) {
      note(t.subject);
      used_.insert(t.predicate.value);
      note(t.object);
    }
  }

  std::string next(const std::string& kind) {
    auto& n = counters_[kind];
    for (;;) {
      std::string candidate = std::string(kContaminationNamespace) + kind + "-" + std::to_string(++n);
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::unordered_set<std::string> used_;
  std::map<std::string, std::uint64_t> counters_;
};

inline constexpr int kMaxAttempts = 32;

class Contaminator {
 public:
  Contaminator(const Dataset& d, const ContaminationPlan& plan, const Dictionary& dict)
      : original_(d), plan_(plan), dict_(dict), triples_(d), rng_(plan.seed), fresh_(d) {
    manifest_.plan = plan;
    manifest_.datasetId = d.id();
  }

  ContaminationResult run() {
    for (const auto h : kAllHeuristics) {
      const auto requested = plan_.intensity(h);
      if (requested == 0) continue;
      refresh();
      const auto achieved = apply(h, requested);
      manifest_.achieved[h] = achieved;
      if (achieved < requested) {
        manifest_.warnings.push_back(heuristicCode(h) + ": achieved " + std::to_string(achieved) +
                                     " of " + std::to_string(requested) + " requested");
      }
    }
    return {triples_.toDataset(original_.id(), Format::NTriples), std::move(manifest_)};
  }

 private:
  void refresh() {
    snapshot_ = triples_.toDataset(original_.id());
    schema_ = buildSchemaIndex(snapshot_);
    instances_ = buildInstanceIndex(snapshot_, schema_);
  }

  bool add(HeuristicId h, const Triple& t) {
    if (!triples_.add(t)) return false;
    const auto action = isSchemaTriple(t) ? EditAction::AddAxiom : EditAction::AddTriple;
    manifest_.edits.push_back({h, action, std::nullopt, t});
    return true;
  }

  bool remove(HeuristicId h, const Triple& t) {
    if (!triples_.remove(t)) return false;
    const auto action = isSchemaTriple(t) ? EditAction::RemoveAxiom : EditAction::RemoveTriple;
    manifest_.edits.push_back({h, action, t, std::nullopt});
    return true;
  }

  bool rewrite(HeuristicId h, const Triple& before, const Triple& after) {
    if (!triples_.rewrite(before, after)) return false;
    manifest_.edits.push_back({h, EditAction::RewriteTriple, before, after});
    return true;
  }

  // Snapshot indices of triples satisfying pred, shuffled.
  template <typename Pred>
  std::vector<std::size_t> candidates(Pred&& pred) {
    std::vector<std::size_t> out;
    const auto ts = snapshot_.triples();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (pred(ts[i])) out.push_back(i);
    }
    rng_.shuffle(out);
    return out;
  }

  std::string randomLetters(std::size_t minLen, std::size_t maxLen) {
    const auto len = minLen + rng_.index(maxLen - minLen + 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += rng_.lowercaseLetter();
    return s;
  }

  static Triple withObject(const Triple& t, Term object) { return {t.subject, t.predicate, std::move(object)}; }

  static Literal withLexical(const Literal& lit, std::string lexical) {
    return {std::move(lexical), lit.datatype, lit.language};
  }

  std::uint64_t apply(HeuristicId h, std::uint64_t n) {
    switch (h) {
      case HeuristicId::H1: return addUnusedProperties(n);
      case HeuristicId::H2: return removePropertyValues(n);
      case HeuristicId::H3: return outOfRangeValues(n);
      case HeuristicId::H4: return mutateCharacters(n);
      case HeuristicId::H5: return replaceWithUnknownWord(n);
      case HeuristicId::H6: return renameTerms(n);
      case HeuristicId::H7: return removeDefinitions(n);
      case HeuristicId::H8: return disjointSharedClasses(n);
      case HeuristicId::H9: return instancesInDisjointPair(n);
      case HeuristicId::H10: return inconsistentCompanions(n);
      case HeuristicId::H11: return copyWithNewObject(n);
      case HeuristicId::H12: return copyWithNewSubject(n);
      case HeuristicId::H13: return retagDatatypes(n);
      case HeuristicId::H14: return cloneClasses(n);
    }
    return 0;
  }

  std::uint64_t addUnusedProperties(std::uint64_t n) {
    std::uint64_t done = 0;
    for (; done < n; ++done) {
      add(HeuristicId::H1, {iri(fresh_.next("property")), Iri{vocab::rdfType},
                            iri(vocab::owlObjectProperty)});
    }
    return done;
  }

  // Property values only; typing triples and schema stay.
  std::uint64_t removePropertyValues(std::uint64_t n) {
    const auto pool = candidates([](const Triple& t) {
      return t.predicate.value != vocab::rdfType && !isSchemaTriple(t);
    });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      done += remove(HeuristicId::H2, snapshot_[*i]) ? 1 : 0;
    }
    return done;
  }

  // Literal values of datatype properties whose ranges all have a checked
  // lexical space other than xsd:string, and which are currently valid.
  std::uint64_t outOfRangeValues(std::uint64_t n) {
    auto eligible = [&](const Triple& t) {
      if (schema_.kindOf(t.predicate.value) != PropertyKind::DatatypeProperty) return false;
      if (!isLiteral(t.object) || isOutOfRange(t, schema_, instances_)) return false;
      const auto& ranges = schema_.datatypeRangesOf(t.predicate.value);
      return !ranges.empty() && std::all_of(ranges.begin(), ranges.end(), [](const std::string& r) {
        return xsd::isCheckable(r) && r != vocab::xsdString;
      });
    };
    const auto pool = candidates(eligible);
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      const auto& lit = std::get<Literal>(t.object);
      const auto& ranges = schema_.datatypeRangesOf(t.predicate.value);
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto lexical = randomLetters(4, 8);
        const bool invalid = std::none_of(ranges.begin(), ranges.end(), [&](const std::string& r) {
          return xsd::isValidLexical(lexical, r);
        });
        if (invalid && rewrite(HeuristicId::H3, t, withObject(t, withLexical(lit, std::move(lexical))))) {
          ++done;
          break;
        }
      }
    }
    return done;
  }

  // One inserted or deleted letter in a dictionary word of a clean literal.
  std::uint64_t mutateCharacters(std::uint64_t n) {
    const auto pool = candidates([&](const Triple& t) {
      const auto* lit = asLiteral(t.object);
      return lit != nullptr && isCheckableLiteral(*lit) && !isMisspelled(*lit, dict_) &&
             !checkableTokens(lit->lexical).empty();
    });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      const auto& lit = std::get<Literal>(t.object);
      const auto tokens = checkableTokens(lit.lexical);
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const auto token = tokens[rng_.index(tokens.size())];
        const auto offset = static_cast<std::size_t>(token.data() - lit.lexical.data());
        std::string mutated(token);
        if (token.size() > 2 && rng_.coin()) {
          mutated.erase(rng_.index(mutated.size()), 1);
        } else {
          mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(rng_.index(mutated.size() + 1)),
                         rng_.lowercaseLetter());
        }
        if (dict_.contains(mutated)) continue;
        auto lexical = lit.lexical;
        lexical.replace(offset, token.size(), mutated);
        if (rewrite(HeuristicId::H4, t, withObject(t, withLexical(lit, std::move(lexical))))) {
          ++done;
          break;
        }
      }
    }
    return done;
  }

  std::uint64_t replaceWithUnknownWord(std::uint64_t n) {
    const auto pool = candidates([&](const Triple& t) {
      const auto* lit = asLiteral(t.object);
      return lit != nullptr && isCheckableLiteral(*lit) && !isMisspelled(*lit, dict_);
    });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      const auto& lit = std::get<Literal>(t.object);
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto word = randomLetters(6, 10);
        if (dict_.contains(word)) continue;
        if (rewrite(HeuristicId::H5, t, withObject(t, withLexical(lit, std::move(word))))) {
          ++done;
          break;
        }
      }
    }
    return done;
  }

  // Typing triples get a fresh class; property triples a fresh predicate.
  std::uint64_t renameTerms(std::uint64_t n) {
    const auto pool = candidates([&](const Triple& t) {
      if (t.predicate.value == vocab::rdfType) {
        const auto* o = asIri(t.object);
        return o != nullptr && schema_.hasClass(o->value);
      }
      return schema_.hasProperty(t.predicate.value);
    });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      Triple after = t;
      if (t.predicate.value == vocab::rdfType) {
        after.object = iri(fresh_.next("class"));
      } else {
        after.predicate = Iri{fresh_.next("property")};
      }
      done += rewrite(HeuristicId::H6, t, after) ? 1 : 0;
    }
    return done;
  }

  // Every triple that would make `term` a declared class or property.
  std::vector<Triple> declarationsOf(const std::string& term) const {
    std::vector<Triple> out;
    triples_.forEach([&](const Triple& t) {
      const auto& p = t.predicate.value;
      const auto* s = asIri(t.subject);
      const auto* o = asIri(t.object);
      const bool subjectIs = s != nullptr && s->value == term;
      const bool objectIs = o != nullptr && o->value == term;
      if (subjectIs && (isSchemaTriple(t) && (p == vocab::rdfType || p == vocab::rdfsSubClassOf ||
                                               p == vocab::owlDisjointWith ||
                                               p == vocab::owlComplementOf ||
                                               p == vocab::rdfsDomain || p == vocab::rdfsRange))) {
        out.push_back(t);
      } else if (objectIs && (p == vocab::rdfsDomain || p == vocab::rdfsRange)) {
        out.push_back(t);
      }
    });
    return out;
  }

  std::uint64_t removeDefinitions(std::uint64_t n) {
    std::vector<std::string> pool;
    for (const auto& c : schema_.classes()) {
      if (!instances_.typeTriplesWithObject(toNTriples(iri(c))).empty()) pool.push_back(c);
    }
    for (const auto& p : schema_.properties()) {
      if (!instances_.triplesUsing(p).empty()) pool.push_back(p);
    }
    rng_.shuffle(pool);
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto declarations = declarationsOf(*i);
      if (declarations.empty()) continue;  // already undeclared by an earlier removal
      for (const auto& t : declarations) remove(HeuristicId::H7, t);
      ++done;
    }
    return done;
  }

  // Pairs of declared classes sharing an instance, not already disjoint and
  // not subclass-related (a disjoint subclass pair is a different defect).
  std::uint64_t disjointSharedClasses(std::uint64_t n) {
    OrderedSet<ClassPair, ClassPairHash> shared;
    for (const auto& instance : instances_.instances()) {
      const auto& classes = instances_.classesOf(instance);
      for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a + 1; b < classes.size(); ++b) {
          const auto& x = classes[a];
          const auto& y = classes[b];
          if (!schema_.hasClass(x) || !schema_.hasClass(y) || schema_.areDisjoint(x, y)) continue;
          if (schema_.isSubclassOf(x, y) || schema_.isSubclassOf(y, x)) continue;
          shared.insert(makeClassPair(x, y));
        }
      }
    }
    std::vector<ClassPair> pool(shared.begin(), shared.end());
    rng_.shuffle(pool);
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      done += add(HeuristicId::H8, {iri(i->first), Iri{vocab::owlDisjointWith}, iri(i->second)}) ? 1 : 0;
    }
    return done;
  }

  std::uint64_t instancesInDisjointPair(std::uint64_t n) {
    const std::vector<ClassPair> pairs(schema_.disjointPairs().begin(), schema_.disjointPairs().end());
    if (pairs.empty()) return 0;
    std::uint64_t done = 0;
    for (; done < n; ++done) {
      const auto& [a, b] = pairs[rng_.index(pairs.size())];
      const auto instance = iri(fresh_.next("instance"));
      add(HeuristicId::H9, {instance, Iri{vocab::rdfType}, iri(a)});
      add(HeuristicId::H9, {instance, Iri{vocab::rdfType}, iri(b)});
    }
    return done;
  }

  std::uint64_t inconsistentCompanions(std::uint64_t n) {
    const auto pool = candidates([](const Triple& t) { return isLiteral(t.object); });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      done += add(HeuristicId::H10, withObject(snapshot_[*i], iri(fresh_.next("value")))) ? 1 : 0;
    }
    return done;
  }

  // A different object of the same kind: fresh IRI, longer integer, or a
  // suffixed lexical form.
  Term alternativeObject(const Term& object) {
    const auto* lit = asLiteral(object);
    if (lit == nullptr) return iri(fresh_.next("value"));
    if (lit->datatype && *lit->datatype == vocab::xsdInteger && xsd::isValidInteger(lit->lexical)) {
      return withLexical(*lit, lit->lexical + static_cast<char>('0' + rng_.below(10)));
    }
    return withLexical(*lit, lit->lexical + "-" + std::to_string(2 + rng_.below(1000)));
  }

  std::uint64_t copyWithNewObject(std::uint64_t n) {
    const auto pool = candidates([&](const Triple& t) { return schema_.isFunctional(t.predicate.value); });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (add(HeuristicId::H11, withObject(t, alternativeObject(t.object)))) {
          ++done;
          break;
        }
      }
    }
    return done;
  }

  std::uint64_t copyWithNewSubject(std::uint64_t n) {
    const auto pool =
        candidates([&](const Triple& t) { return schema_.isInverseFunctional(t.predicate.value); });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      done += add(HeuristicId::H12, {iri(fresh_.next("instance")), t.predicate, t.object}) ? 1 : 0;
    }
    return done;
  }

  std::uint64_t retagDatatypes(std::uint64_t n) {
    static const std::array<const std::string*, 3> kAlternatives{&vocab::xsdString, &vocab::xsdToken,
                                                                 &vocab::xsdAnyUri};
    auto retagged = [&](const Triple& t) -> std::optional<Triple> {
      const auto& lit = std::get<Literal>(t.object);
      const auto& ranges = schema_.datatypeRangesOf(t.predicate.value);
      for (const auto* dt : kAlternatives) {
        Literal candidate{lit.lexical, *dt, std::nullopt};
        if (candidate == lit) continue;
        if (std::none_of(ranges.begin(), ranges.end(), [&](const std::string& r) {
              return detail::datatypeAccepts(candidate, r);
            })) {
          return withObject(t, std::move(candidate));
        }
      }
      return std::nullopt;
    };
    const auto pool = candidates([&](const Triple& t) {
      return isLiteral(t.object) && schema_.kindOf(t.predicate.value) == PropertyKind::DatatypeProperty &&
             !schema_.datatypeRangesOf(t.predicate.value).empty() && !hasImproperDatatype(t, schema_);
    });
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i) {
      const auto& t = snapshot_[*i];
      const auto after = retagged(t);
      done += after && rewrite(HeuristicId::H13, t, *after) ? 1 : 0;
    }
    return done;
  }

  std::uint64_t cloneClasses(std::uint64_t n) {
    std::vector<std::string> pool;
    for (const auto& c : schema_.classes()) {
      if (!instances_.membersOf(c).empty()) pool.push_back(c);
    }
    rng_.shuffle(pool);
    std::uint64_t done = 0;
    for (auto i = pool.begin(); i != pool.end() && done < n; ++i, ++done) {
      const auto clone = iri(fresh_.next("class"));
      add(HeuristicId::H14, {clone, Iri{vocab::rdfType}, iri(vocab::owlClass)});
      for (const auto& member : instances_.membersOf(*i)) {
        add(HeuristicId::H14, {iri(member), Iri{vocab::rdfType}, clone});
      }
    }
    return done;
  }

  const Dataset& original_;
  const ContaminationPlan& plan_;
  const Dictionary& dict_;
  EditableTriples triples_;
  SeededRng rng_;
  FreshIris fresh_;
  ContaminationManifest manifest_;
  Dataset snapshot_;
  SchemaIndex schema_;
  InstanceIndex instances_;
};

}  // namespace detail

// Applies the plan's heuristics in order H1..H14. Shortfalls become warnings.
inline ContaminationResult contaminate(const Dataset& d, const ContaminationPlan& plan,
                                       const Dictionary& dict = {}) {
  return detail::Contaminator(d, plan, dict).run();
}

// Rebuilds the contaminated dataset from the original and the edit log.
inline Dataset replay(const Dataset& original, const ContaminationManifest& manifest) {
  EditableTriples triples(original);
  for (std::size_t k = 0; k < manifest.edits.size(); ++k) {
    const auto& e = manifest.edits[k];
    bool ok = false;
    switch (e.action) {
      case EditAction::AddTriple:
      case EditAction::AddAxiom:
        ok = e.after && triples.add(*e.after);
        break;
      case EditAction::RemoveTriple:
      case EditAction::RemoveAxiom:
        ok = e.before && triples.remove(*e.before);
        break;
      case EditAction::RewriteTriple:
        ok = e.before && e.after && triples.rewrite(*e.before, *e.after);
        break;
    }
    if (!ok) {
      throw FormatError("edit " + std::to_string(k) + " (" + std::string(editActionName(e.action)) +
                        ") does not apply to this dataset");
    }
  }
  return triples.toDataset(original.id(), Format::NTriples);
}

// ---- JSON ----

inline Triple parseStatement(std::string_view statement) {
  std::vector<Triple> out;
  RdfReader(statement, Format::NTriples).read([&](Triple&& t) { out.push_back(std::move(t)); });
  if (out.size() != 1) throw FormatError("expected one N-Triples statement: " + std::string(statement));
  return std::move(out.front());
}

inline nlohmann::ordered_json planToJson(const ContaminationPlan& plan) {
  nlohmann::ordered_json j;
  if (!plan.datasetId.empty()) j["datasetId"] = plan.datasetId;
  j["seed"] = plan.seed;
  auto& intensities = j["intensities"] = nlohmann::ordered_json::object();
  for (const auto& [h, n] : plan.intensities) intensities[heuristicCode(h)] = n;
  return j;
}

inline ContaminationPlan planFromJson(const nlohmann::ordered_json& j) {
  try {
    ContaminationPlan plan;
    plan.datasetId = j.value("datasetId", std::string{});
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw FormatError("seed must be a non-negative integer");
      plan.seed = j["seed"].get<std::uint64_t>();
    }
    for (const auto& [key, value] : j.at("intensities").items()) {
      const auto h = parseHeuristicId(key);
      if (!h) throw FormatError("unknown heuristic '" + key + "'");
      if (!value.is_number_unsigned()) throw FormatError(key + " intensity must be a non-negative integer");
      plan.intensities[*h] = value.get<std::uint64_t>();
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed plan: ") + e.what());
  }
}

inline ContaminationPlan readPlanJson(std::istream& in) {
  try {
    return planFromJson(nlohmann::ordered_json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("plan is not JSON: ") + e.what());
  }
}

inline nlohmann::ordered_json manifestToJson(const ContaminationManifest& m) {
  using J = nlohmann::ordered_json;
  J j;
  j["datasetId"] = m.datasetId;
  j["toolVersion"] = m.toolVersion;
  j["namespace"] = m.iriNamespace;
  j["plan"] = planToJson(m.plan);
  J edits = J::array();
  for (const auto& e : m.edits) {
    edits.push_back({{"heuristic", heuristicCode(e.heuristic)},
                     {"action", editActionName(e.action)},
                     {"before", e.before ? J(toNTriples(*e.before)) : J(nullptr)},
                     {"after", e.after ? J(toNTriples(*e.after)) : J(nullptr)}});
  }
  j["edits"] = std::move(edits);
  J achieved = J::object();
  for (const auto& [h, n] : m.achieved) achieved[heuristicCode(h)] = n;
  j["achieved"] = std::move(achieved);
  j["warnings"] = m.warnings;
  return j;
}

inline ContaminationManifest manifestFromJson(const nlohmann::ordered_json& j) {
  try {
    ContaminationManifest m;
    m.datasetId = j.value("datasetId", std::string{});
    m.toolVersion = j.value("toolVersion", std::string(kToolVersion));
    m.iriNamespace = j.value("namespace", std::string(kContaminationNamespace));
    m.plan = planFromJson(j.at("plan"));
    for (const auto& e : j.at("edits")) {
      Edit edit;
      const auto h = parseHeuristicId(e.at("heuristic").get<std::string>());
      const auto a = parseEditAction(e.at("action").get<std::string>());
      if (!h || !a) throw FormatError("bad heuristic or action in manifest edit");
      edit.heuristic = *h;
      edit.action = *a;
      if (e.contains("before") && !e["before"].is_null()) {
        edit.before = parseStatement(e["before"].get<std::string>());
      }
      if (e.contains("after") && !e["after"].is_null()) {
        edit.after = parseStatement(e["after"].get<std::string>());
      }
      m.edits.push_back(std::move(edit));
    }
    if (j.contains("achieved")) {
      for (const auto& [key, value] : j["achieved"].items()) {
        const auto h = parseHeuristicId(key);
        if (!h) throw FormatError("unknown heuristic '" + key + "'");
        m.achieved[*h] = value.get<std::uint64_t>();
      }
    }
    if (j.contains("warnings")) m.warnings = j["warnings"].get<std::vector<std::string>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what());
  }
}

inline ContaminationManifest readManifestJson(std::istream& in) {
  try {
    return manifestFromJson(nlohmann::ordered_json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest is not JSON: ") + e.what());
  }
}

inline void writeManifestJson(const ContaminationManifest& m, std::ostream& out) {
  out << manifestToJson(m).dump(2) << '\n';
}

}  // namespace rdfqa
