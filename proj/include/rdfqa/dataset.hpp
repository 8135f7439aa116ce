// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdfqa/error.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/reader.hpp"
#include "rdfqa/term.hpp"

namespace rdfqa {

// An immutable RDF graph in document order. Exact duplicate triples are
// dropped on construction; the number dropped is kept.
class Dataset {
 public:
  Dataset() = default;

  Dataset(std::string id, std::vector<Triple> triples, Format sourceFormat = Format::NTriples)
      : id_(std::move(id)), sourceFormat_(sourceFormat) {
    std::unordered_set<Triple, TripleHash> seen;
    seen.reserve(triples.size());
    triples_.reserve(triples.size());
    for (auto& t : triples) {
      if (seen.insert(t).second) {
        triples_.push_back(std::move(t));
      } else {
        ++duplicateCount_;
      }
    }
  }

  const std::string& id() const noexcept { return id_; }
  std::span<const Triple> triples() const noexcept { return triples_; }
  const Triple& operator[](std::size_t i) const { return triples_[i]; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  Format sourceFormat() const noexcept { return sourceFormat_; }
  std::size_t duplicateCount() const noexcept { return duplicateCount_; }

 private:
  std::string id_;
  std::vector<Triple> triples_;
  Format sourceFormat_ = Format::NTriples;
  std::size_t duplicateCount_ = 0;
};

inline Dataset parseDataset(std::string_view text, Format format, std::string id,
                            ReadOptions options = {}) {
  std::vector<Triple> triples;
  RdfReader reader(text, format, std::move(options));
  reader.read([&](Triple&& t) { triples.push_back(std::move(t)); });
  return Dataset(std::move(id), std::move(triples), format);
}

inline Dataset parseDataset(std::istream& in, Format format, std::string id,
                            ReadOptions options = {}) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parseDataset(text, format, std::move(id), std::move(options));
}

// .ttl / .turtle / .n3 read as Turtle, everything else as N-Triples.
inline Format formatFromPath(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".ttl" || ext == ".turtle" || ext == ".n3") return Format::Turtle;
  return Format::NTriples;
}

// Loads a file; the dataset id is the file stem and the Turtle base is the
// file's own URI.
inline Dataset loadDataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ReadOptions options;
  options.baseIri = "file://" + std::filesystem::absolute(path).lexically_normal().string();
  return parseDataset(in, formatFromPath(path), path.stem().string(), std::move(options));
}

// Schema triples first, then data; the result keeps the data id.
inline Dataset mergeDatasets(const Dataset& schema, const Dataset& data) {
  std::vector<Triple> all;
  all.reserve(schema.size() + data.size());
  all.insert(all.end(), schema.triples().begin(), schema.triples().end());
  all.insert(all.end(), data.triples().begin(), data.triples().end());
  return Dataset(data.id(), std::move(all), data.sourceFormat());
}

// Canonical N-Triples: one statement per line, document order, LF endings.
inline void serializeDataset(const Dataset& d, std::ostream& out) {
  std::string line;
  for (const auto& t : d.triples()) {
    line = toNTriples(t);
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

inline std::string serializeDataset(const Dataset& d) {
  std::string out;
  for (const auto& t : d.triples()) {
    out += toNTriples(t);
    out += '\n';
  }
  return out;
}

}  // namespace rdfqa
