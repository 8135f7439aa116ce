// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdfqa/dataset.hpp"
#include "rdfqa/error.hpp"
#include "rdfqa/metrics.hpp"

namespace rdfqa {

using Json = nlohmann::ordered_json;

// Shortest decimal text that parses back to the same double.
inline std::string formatExact(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, end);
}

// Two-decimal display. Values that round to zero print without a sign.
inline std::string formatRounded(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline Json offenderToJson(const Offender& o, const Dataset* d) {
  if (const auto* ref = std::get_if<TripleRef>(&o)) {
    Json j{{"triple", ref->index}};
    if (d != nullptr && ref->index < d->size()) j["statement"] = toNTriples((*d)[ref->index]);
    return j;
  }
  return Json{{"iri", std::get<std::string>(o)}};
}

// With a dataset, triple offenders also carry their N-Triples statement.
inline Json reportToJson(const MetricReport& r, const Dataset* d = nullptr) {
  Json j;
  j["datasetId"] = r.datasetId;
  j["toolVersion"] = r.toolVersion;
  j["dictionaryId"] = r.dictionaryId ? Json(*r.dictionaryId) : Json(nullptr);
  j["counts"] = {{"triples", r.counts.triples},
                 {"instances", r.counts.instances},
                 {"classes", r.counts.classes},
                 {"properties", r.counts.properties}};
  j["duplicateCount"] = r.duplicateCount;
  j["flags"] = r.flags;
  Json metrics = Json::object();
  for (const auto& [id, v] : r.metrics) {
    Json offenders = Json::array();
    for (const auto& o : v.offenders) offenders.push_back(offenderToJson(o, d));
    metrics[std::string(metricCode(id))] = {{"name", metricName(id)},
                                            {"value", v.value},
                                            {"numerator", v.numerator},
                                            {"denominator", v.denominator},
                                            {"clamped", v.clamped},
                                            {"degenerate", v.degenerate},
                                            {"offenders", std::move(offenders)}};
  }
  j["metrics"] = std::move(metrics);
  return j;
}

inline MetricReport reportFromJson(const Json& j) {
  try {
    MetricReport r;
    r.datasetId = j.at("datasetId").get<std::string>();
    r.toolVersion = j.value("toolVersion", std::string(kToolVersion));
    if (j.contains("dictionaryId") && !j["dictionaryId"].is_null()) {
      r.dictionaryId = j["dictionaryId"].get<std::string>();
    }
    if (j.contains("counts")) {
      const auto& c = j["counts"];
      r.counts = {c.value("triples", std::uint64_t{0}), c.value("instances", std::uint64_t{0}),
                  c.value("classes", std::uint64_t{0}), c.value("properties", std::uint64_t{0})};
    }
    r.duplicateCount = j.value("duplicateCount", std::uint64_t{0});
    if (j.contains("flags")) r.flags = j["flags"].get<std::vector<std::string>>();
    for (const auto& [code, m] : j.at("metrics").items()) {
      const auto id = parseMetricId(code);
      if (!id) throw FormatError("unknown metric '" + code + "'");
      MetricValue v;
      v.id = *id;
      v.value = m.at("value").get<double>();
      v.numerator = m.value("numerator", std::uint64_t{0});
      v.denominator = m.value("denominator", std::uint64_t{0});
      v.clamped = m.value("clamped", false);
      v.degenerate = m.value("degenerate", false);
      if (m.contains("offenders")) {
        for (const auto& o : m["offenders"]) {
          if (o.contains("triple")) {
            v.offenders.emplace_back(TripleRef{o["triple"].get<std::size_t>()});
          } else {
            v.offenders.emplace_back(o.at("iri").get<std::string>());
          }
        }
      }
      r.metrics.emplace(*id, std::move(v));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

inline MetricReport readReportJson(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("report is not JSON: ") + e.what());
  }
  return reportFromJson(j);
}

inline void writeReportJson(const MetricReport& r, std::ostream& out,
                            const Dataset* d = nullptr) {
  out << reportToJson(r, d).dump(2) << '\n';
}

// "dataset,M1,...": selected metrics in canonical order.
inline std::string csvHeader(const std::vector<MetricId>& ids) {
  std::string line = "dataset";
  for (auto id : ids) {
    line += ',';
    line += metricCode(id);
  }
  return line;
}

inline std::string csvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csvRow(const MetricReport& r) {
  std::string line = csvField(r.datasetId);
  for (const auto& [_, v] : r.metrics) {
    line += ',';
    line += formatExact(v.value);
  }
  return line;
}

inline void writeReportsCsv(const std::vector<MetricReport>& reports, std::ostream& out) {
  if (reports.empty()) return;
  const auto ids = reports.front().selection();
  out << csvHeader(ids) << '\n';
  for (const auto& r : reports) {
    if (r.selection() != ids) throw MetricMismatch("CSV rows need the same metric selection");
    out << csvRow(r) << '\n';
  }
}

namespace detail {

inline std::vector<std::string> splitCsvLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace detail

// Reads value-only reports (no counts or offenders) from CSV rows.
inline std::vector<MetricReport> readReportsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  const auto header = detail::splitCsvLine(line);
  if (header.empty() || header.front() != "dataset") throw FormatError("CSV header must start with 'dataset'");
  std::vector<MetricId> ids;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto id = parseMetricId(header[i]);
    if (!id) throw FormatError("unknown metric column '" + header[i] + "'");
    ids.push_back(*id);
  }
  std::vector<MetricReport> reports;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = detail::splitCsvLine(line);
    if (fields.size() != header.size()) throw FormatError("CSV row has wrong column count");
    MetricReport r;
    r.datasetId = fields[0];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      MetricValue v;
      v.id = ids[i];
      const auto& f = fields[i + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v.value);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw FormatError("bad number '" + f + "' in CSV");
      }
      r.metrics.emplace(ids[i], std::move(v));
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

// Fixed-width table rounded to 0.01, one row per report.
inline void writeReportsTable(const std::vector<MetricReport>& reports, std::ostream& out) {
  if (reports.empty()) return;
  const auto ids = reports.front().selection();
  std::size_t nameWidth = 7;
  for (const auto& r : reports) nameWidth = std::max(nameWidth, r.datasetId.size());
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };
  std::string line = "Dataset";
  line.resize(nameWidth, ' ');
  for (auto id : ids) line += pad(std::string(metricCode(id)), 6);
  out << line << '\n';
  for (const auto& r : reports) {
    line = r.datasetId;
    line.resize(nameWidth, ' ');
    for (auto id : ids) {
      const auto* v = r.find(id);
      line += pad(v != nullptr ? formatRounded(v->value) : "n/a", 6);
    }
    out << line << '\n';
  }
}

}  // namespace rdfqa
