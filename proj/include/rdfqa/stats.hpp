// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/students_t.hpp>
#include <nlohmann/json.hpp>

#include "rdfqa/contaminate.hpp"
#include "rdfqa/error.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/report_io.hpp"

namespace rdfqa {

struct SummaryRow {
  MetricId metricId = MetricId::M1_MissVlu;
  double mean = 0.0;
  double stdev = 0.0;  // sample (n - 1); 0 for a single value
};

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

inline double sampleStdev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Metrics present in every report, in canonical order.
inline std::vector<MetricId> commonMetrics(const std::vector<MetricReport>& reports) {
  std::vector<MetricId> ids;
  if (reports.empty()) return ids;
  for (const auto id : kAllMetrics) {
    if (std::all_of(reports.begin(), reports.end(),
                    [&](const MetricReport& r) { return r.find(id) != nullptr; })) {
      ids.push_back(id);
    }
  }
  return ids;
}

inline std::vector<double> metricColumn(const std::vector<MetricReport>& reports, MetricId id) {
  std::vector<double> xs;
  xs.reserve(reports.size());
  for (const auto& r : reports) {
    const auto* v = r.find(id);
    if (v == nullptr) throw MetricMismatch("report " + r.datasetId + " lacks " + std::string(metricCode(id)));
    xs.push_back(v->value);
  }
  return xs;
}

inline std::vector<SummaryRow> summarize(const std::vector<MetricReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("summarize needs at least one report");
  std::vector<SummaryRow> rows;
  for (const auto id : commonMetrics(reports)) {
    const auto xs = metricColumn(reports, id);
    rows.push_back({id, mean(xs), sampleStdev(xs)});
  }
  return rows;
}

struct DeltaReport {
  std::string datasetId;
  MetricReport before;
  MetricReport after;
  std::map<MetricId, double> delta;  // after - before
};

inline DeltaReport computeDelta(const MetricReport& before, const MetricReport& after) {
  if (before.selection() != after.selection()) {
    throw MetricMismatch("reports carry different metric selections");
  }
  DeltaReport d{after.datasetId.empty() ? before.datasetId : after.datasetId, before, after, {}};
  for (const auto& [id, v] : after.metrics) d.delta[id] = v.value - before.metrics.at(id).value;
  return d;
}

// ---- Spearman's rho ----

// Ranks starting at 1; ties share the average of the ranks they span.
inline std::vector<double> averageRanks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

inline double pearson(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

enum class PValueMethod { TApproximation, ExactPermutation };

struct SpearmanResult {
  bool undefined = false;  // one input is constant
  double rho = 0.0;
  double pValue = 1.0;
};

inline double tApproximationP(double rho, std::size_t n) {
  const double denom = 1.0 - rho * rho;
  if (denom <= 0.0) return 0.0;
  const double t = rho * std::sqrt(static_cast<double>(n - 2) / denom);
  const boost::math::students_t dist(static_cast<double>(n - 2));
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))));
}

// Share of all orderings of y's ranks whose |rho| reaches the observed one.
inline double permutationP(const std::vector<double>& rx, std::vector<double> ry, double rho) {
  std::sort(ry.begin(), ry.end());
  const double threshold = std::fabs(rho) - 1e-12;
  std::size_t hits = 0;
  std::size_t total = 0;
  do {
    ++total;
    if (std::fabs(pearson(rx, ry)) >= threshold) ++hits;
  } while (std::next_permutation(ry.begin(), ry.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

inline constexpr std::size_t kMaxPermutationN = 10;

inline SpearmanResult spearmanRho(std::span<const double> x, std::span<const double> y,
                                  PValueMethod method = PValueMethod::TApproximation) {
  if (x.size() != y.size()) throw std::invalid_argument("spearmanRho: length mismatch");
  if (x.size() < 3) throw std::invalid_argument("spearmanRho: needs at least 3 samples");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y)) return {true, 0.0, 1.0};
  const auto rx = averageRanks(x);
  const auto ry = averageRanks(y);
  const double rho = std::clamp(pearson(rx, ry), -1.0, 1.0);
  if (method == PValueMethod::ExactPermutation) {
    if (x.size() > kMaxPermutationN) throw std::invalid_argument("exact permutation p needs n <= 10");
    return {false, rho, permutationP(rx, ry, rho)};
  }
  return {false, rho, tApproximationP(rho, x.size())};
}

struct CorrelationCell {
  MetricId a = MetricId::M1_MissVlu;
  MetricId b = MetricId::M1_MissVlu;
  SpearmanResult result;
  bool significant = false;
};

struct CorrelationMatrix {
  std::vector<MetricId> metricIds;
  std::vector<CorrelationCell> cells;  // upper triangle, row-major
  double alpha = 0.05;
  std::size_t n = 0;

  const CorrelationCell* find(MetricId a, MetricId b) const {
    if (b < a) std::swap(a, b);
    for (const auto& c : cells) {
      if (c.a == a && c.b == b) return &c;
    }
    return nullptr;
  }
};

inline CorrelationMatrix correlationMatrix(const std::vector<MetricReport>& reports, double alpha = 0.05,
                                           PValueMethod method = PValueMethod::TApproximation) {
  if (reports.size() < 3) throw std::invalid_argument("correlation needs at least 3 reports");
  CorrelationMatrix m;
  m.metricIds = commonMetrics(reports);
  m.alpha = alpha;
  m.n = reports.size();
  std::vector<std::vector<double>> columns;
  for (const auto id : m.metricIds) columns.push_back(metricColumn(reports, id));
  for (std::size_t i = 0; i < m.metricIds.size(); ++i) {
    for (std::size_t j = i + 1; j < m.metricIds.size(); ++j) {
      CorrelationCell cell{m.metricIds[i], m.metricIds[j], spearmanRho(columns[i], columns[j], method), false};
      cell.significant = !cell.result.undefined && cell.result.pValue <= alpha;
      m.cells.push_back(cell);
    }
  }
  return m;
}

// Two lines per metric: rho values, then '*' (p <= alpha) or '-'.
inline void renderCorrelationText(const CorrelationMatrix& m, std::ostream& out) {
  constexpr int kWidth = 7;
  auto cell = [&](std::string s) {
    if (s.size() < kWidth) s.insert(0, kWidth - s.size(), ' ');
    return s;
  };
  std::string line = "Rho    ";
  for (const auto id : m.metricIds) line += cell(std::string(metricCode(id)));
  out << line << '\n';
  for (std::size_t i = 0; i < m.metricIds.size(); ++i) {
    std::string values = std::string(metricCode(m.metricIds[i]));
    values.resize(kWidth, ' ');
    std::string marks = "p value";
    for (std::size_t j = 0; j < m.metricIds.size(); ++j) {
      if (j <= i) {
        values += cell("");
        marks += cell("");
        continue;
      }
      const auto* c = m.find(m.metricIds[i], m.metricIds[j]);
      values += cell(c->result.undefined ? "n/a" : formatRounded(c->result.rho));
      marks += cell(c->significant ? "*" : "-");
    }
    out << values << '\n' << marks << '\n';
  }
  out << "('-' means p value > " << formatExact(m.alpha) << " and '*' means p value <= "
      << formatExact(m.alpha) << "; n/a marks a constant metric; n = " << m.n << ")\n";
}

inline void renderCorrelationCsv(const CorrelationMatrix& m, std::ostream& out) {
  out << "metricA,metricB,rho,pValue,significant,undefined\n";
  for (const auto& c : m.cells) {
    out << metricCode(c.a) << ',' << metricCode(c.b) << ',';
    if (c.result.undefined) {
      out << ",,";
    } else {
      out << formatExact(c.result.rho) << ',' << formatExact(c.result.pValue) << ',';
    }
    out << (c.significant ? "true" : "false") << ',' << (c.result.undefined ? "true" : "false") << '\n';
  }
}

inline nlohmann::ordered_json correlationToJson(const CorrelationMatrix& m) {
  using J = nlohmann::ordered_json;
  J j;
  j["n"] = m.n;
  j["alpha"] = m.alpha;
  J ids = J::array();
  for (const auto id : m.metricIds) ids.push_back(metricCode(id));
  j["metrics"] = std::move(ids);
  J pairs = J::array();
  for (const auto& c : m.cells) {
    pairs.push_back({{"a", metricCode(c.a)},
                     {"b", metricCode(c.b)},
                     {"rho", c.result.undefined ? J(nullptr) : J(c.result.rho)},
                     {"pValue", c.result.undefined ? J(nullptr) : J(c.result.pValue)},
                     {"significant", c.significant},
                     {"undefined", c.result.undefined}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

inline void renderSummaryTable(const std::vector<SummaryRow>& rows, std::ostream& out) {
  std::string header = "       ";
  std::string means = "Mean   ";
  std::string stdevs = "STDEV  ";
  auto pad = [](std::string s) {
    if (s.size() < 6) s.insert(0, 6 - s.size(), ' ');
    return s;
  };
  for (const auto& r : rows) {
    header += pad(std::string(metricCode(r.metricId)));
    means += pad(formatRounded(r.mean));
    stdevs += pad(formatRounded(r.stdev));
  }
  out << header << '\n' << means << '\n' << stdevs << '\n';
}

// ---- delta and trend rendering ----

inline void renderDeltaTable(const DeltaReport& d, std::ostream& out) {
  std::vector<MetricReport> rows{d.before, d.after};
  rows[0].datasetId = "before";
  rows[1].datasetId = "after";
  MetricReport delta;
  delta.datasetId = "delta";
  for (const auto& [id, v] : d.delta) {
    MetricValue mv;
    mv.id = id;
    mv.value = v;
    delta.metrics.emplace(id, mv);
  }
  rows.push_back(std::move(delta));
  out << d.datasetId << '\n';
  writeReportsTable(rows, out);
}

inline nlohmann::ordered_json deltaToJson(const DeltaReport& d) {
  nlohmann::ordered_json j;
  j["datasetId"] = d.datasetId;
  auto& delta = j["delta"] = nlohmann::ordered_json::object();
  for (const auto& [id, v] : d.delta) delta[std::string(metricCode(id))] = v;
  return j;
}

// Heuristic groups in metric order, e.g. "H1+H2" for M1.
inline std::vector<HeuristicId> heuristicsFor(MetricId id) {
  std::vector<HeuristicId> hs;
  for (const auto h : kAllHeuristics) {
    if (targetMetric(h) == id) hs.push_back(h);
  }
  return hs;
}

enum class Trend { Positive, Negative, Zero };

// Sign of a change at the display precision of 0.01.
inline Trend trendOf(double delta) {
  const double shown = std::round(delta * 100.0) / 100.0;
  if (shown > 0.0) return Trend::Positive;
  if (shown < 0.0) return Trend::Negative;
  return Trend::Zero;
}

struct TrendCounts {
  // [applied][trend]: applied 0 = heuristic group used, 1 = not used.
  std::array<std::array<std::size_t, 3>, 2> counts{};
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& row : counts) {
      for (auto c : row) t += c;
    }
    return t;
  }
};

// Two rows: achieved heuristic counts per group, then the matching deltas.
inline TrendCounts renderTrendTable(const DeltaReport& d, const ContaminationManifest& m, std::ostream& out) {
  TrendCounts tally;
  std::string heads = "Heuristics   ";
  std::string counts = "Applied      ";
  std::string deltas = "Delta        ";
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };
  for (const auto& [id, value] : d.delta) {
    const auto hs = heuristicsFor(id);
    std::string head;
    std::string applied;
    std::uint64_t total = 0;
    for (const auto h : hs) {
      const auto it = m.achieved.find(h);
      const auto n = it == m.achieved.end() ? 0 : it->second;
      total += n;
      head += (head.empty() ? "" : "+") + heuristicCode(h);
      applied += (applied.empty() ? "" : "+") + std::to_string(n);
    }
    const std::size_t width = std::max<std::size_t>(head.size(), 9) + 2;
    heads += pad(head, width);
    counts += pad(applied, width);
    deltas += pad(formatRounded(value), width);
    tally.counts[total > 0 ? 0 : 1][static_cast<std::size_t>(trendOf(value))]++;
  }
  out << heads << '\n' << counts << '\n' << deltas << '\n';
  return tally;
}

inline void renderTrendCounts(const TrendCounts& t, std::ostream& out) {
  static constexpr std::array<const char*, 3> kNames{"Positive", "Negative", "Zero"};
  const double total = static_cast<double>(std::max<std::size_t>(t.total(), 1));
  out << "Trend       Applied  Not applied\n";
  for (std::size_t k = 0; k < 3; ++k) {
    std::string line = kNames[k];
    line.resize(12, ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6.0f%%  %10.0f%%", 100.0 * t.counts[0][k] / total,
                  100.0 * t.counts[1][k] / total);
    out << line << buf << '\n';
  }
}

}  // namespace rdfqa
