// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "rdfqa/dataset.hpp"
#include "rdfqa/dictionary.hpp"

#ifndef RDFQA_DATA_DIR
#error "RDFQA_DATA_DIR must point at the repository data directory"
#endif

namespace rdfqa::testing {

inline std::filesystem::path dataDir() { return RDFQA_DATA_DIR; }

inline const std::string kFamily = "http://example.org/family#";

inline Dataset loadFamily() { return loadDataset(dataDir() / "family.ttl"); }

inline Dictionary basicDictionary() { return Dictionary::load(dataDir() / "dictionaries" / "basic-en.txt"); }

inline Term fam(const std::string& local) { return iri(kFamily + local); }
inline Iri famP(const std::string& local) { return Iri{kFamily + local}; }

// The dataset plus extra triples, appended in order.
inline Dataset withTriples(const Dataset& d, std::initializer_list<Triple> extra) {
  std::vector<Triple> ts(d.triples().begin(), d.triples().end());
  ts.insert(ts.end(), extra.begin(), extra.end());
  return Dataset(d.id(), std::move(ts), d.sourceFormat());
}

// The dataset with one triple replaced in place.
inline Dataset withReplaced(const Dataset& d, const Triple& before, const Triple& after) {
  std::vector<Triple> ts(d.triples().begin(), d.triples().end());
  for (auto& t : ts) {
    if (t == before) t = after;
  }
  return Dataset(d.id(), std::move(ts), d.sourceFormat());
}

}  // namespace rdfqa::testing
