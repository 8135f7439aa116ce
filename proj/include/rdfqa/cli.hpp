// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command implementations behind the rdfqa binary. Each takes a resolved
// RunConfig plus output and diagnostic streams and returns the exit code.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdfqa/contaminate.hpp"
#include "rdfqa/dataset.hpp"
#include "rdfqa/dictionary.hpp"
#include "rdfqa/error.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/report_io.hpp"
#include "rdfqa/stats.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace rdfqa::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;  // parse error or unreadable input
inline constexpr int kExitUsage = 2;  // bad invocation or metric mismatch

enum class Command { Assess, Contaminate, Compare, Correlate, Summarize };
enum class OutputFormat { Json, Csv, Table };

inline std::optional<OutputFormat> parseOutputFormat(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  return std::nullopt;
}

struct RunConfig {
  Command command = Command::Assess;
  std::vector<fs::path> inputPaths;
  std::optional<fs::path> schemaPath;
  std::optional<fs::path> dictionaryPath;
  std::optional<fs::path> planPath;
  std::optional<fs::path> manifestPath;
  std::optional<fs::path> outputPath;
  std::optional<fs::path> configPath;
  std::optional<OutputFormat> format;
  std::optional<std::vector<MetricId>> metricSelection;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seedOverride;
  std::optional<std::size_t> offenderCap;
  bool parallel = false;
  bool exactP = false;
};

// Splits "M1,M7" or "FP, IFP" into metric ids.
inline std::optional<std::vector<MetricId>> parseMetricList(std::string_view list) {
  std::vector<MetricId> ids;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    auto item = list.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto id = parseMetricId(item);
      if (!id) return std::nullopt;
      ids.push_back(*id);
    }
    pos = end + 1;
  }
  if (ids.empty()) return std::nullopt;
  return ids;
}

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

inline std::optional<std::string> processEnv(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

// Fills unset options. Precedence: flags, then RDFQA_DICTIONARY, then the
// JSON config file named by --config or RDFQA_CONFIG. Relative paths in the
// config file resolve against its directory.
inline void resolveDefaults(RunConfig& cfg, const EnvLookup& env = processEnv) {
  if (!cfg.dictionaryPath) {
    if (auto v = env("RDFQA_DICTIONARY")) cfg.dictionaryPath = fs::path(*v);
  }
  if (!cfg.configPath) {
    if (auto v = env("RDFQA_CONFIG")) cfg.configPath = fs::path(*v);
  }
  if (!cfg.configPath) return;
  std::ifstream in(*cfg.configPath);
  if (!in) throw std::runtime_error("cannot open config " + cfg.configPath->string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("config " + cfg.configPath->string() + " is not JSON: " + e.what());
  }
  const auto base = cfg.configPath->parent_path();
  auto relative = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
  if (!cfg.dictionaryPath && j.contains("dictionary")) {
    cfg.dictionaryPath = relative(j["dictionary"].get<std::string>());
  }
  if (!cfg.schemaPath && j.contains("schema")) cfg.schemaPath = relative(j["schema"].get<std::string>());
  if (!cfg.format && j.contains("format")) {
    cfg.format = parseOutputFormat(j["format"].get<std::string>());
    if (!cfg.format) throw FormatError("config format must be json, csv or table");
  }
  if (!cfg.alpha && j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (!cfg.offenderCap && j.contains("offenderCap")) cfg.offenderCap = j["offenderCap"].get<std::size_t>();
  if (!cfg.metricSelection && j.contains("metrics")) {
    cfg.metricSelection = parseMetricList(j["metrics"].get<std::string>());
    if (!cfg.metricSelection) throw FormatError("config metrics list is invalid");
  }
}

// Writes through a sibling temporary file and renames, so a failed command
// never leaves a partial output behind.
inline void writeFileAtomic(const fs::path& path, const std::string& content) {
#if defined(__unix__) || defined(__APPLE__)
  const auto pid = static_cast<long>(::getpid());
#else
  const long pid = 0;
#endif
  auto tmp = path;
  tmp += ".tmp-" + std::to_string(pid);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace " + path.string());
  }
}

inline void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.outputPath) {
    writeFileAtomic(*cfg.outputPath, content);
  } else {
    out << content;
  }
}

namespace detail {

inline bool requireReadable(const std::vector<fs::path>& paths, std::ostream& err) {
  for (const auto& p : paths) {
    std::error_code ec;
    if (!fs::is_regular_file(p, ec)) {
      err << "rdfqa: cannot read " << p.string() << '\n';
      return false;
    }
  }
  return true;
}

inline std::vector<fs::path> declaredInputs(const RunConfig& cfg) {
  auto paths = cfg.inputPaths;
  for (const auto* p : {&cfg.schemaPath, &cfg.dictionaryPath, &cfg.planPath, &cfg.manifestPath}) {
    if (*p) paths.push_back(**p);
  }
  return paths;
}

inline Dictionary loadDictionary(const RunConfig& cfg) {
  return cfg.dictionaryPath ? Dictionary::load(*cfg.dictionaryPath) : Dictionary{};
}

inline MetricReport loadReport(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return readReportJson(in);
}

// JSON files hold one report; CSV files may hold many rows.
inline std::vector<MetricReport> loadReports(const std::vector<fs::path>& paths) {
  std::vector<MetricReport> reports;
  for (const auto& p : paths) {
    if (p.extension() == ".csv") {
      std::ifstream in(p);
      if (!in) throw std::runtime_error("cannot open " + p.string());
      auto rows = readReportsCsv(in);
      reports.insert(reports.end(), rows.begin(), rows.end());
    } else {
      reports.push_back(loadReport(p));
    }
  }
  return reports;
}

// Maps the exceptions a command can raise to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "rdfqa: syntax error, " << e.what() << '\n';
    return kExitInput;
  } catch (const MetricMismatch& e) {
    err << "rdfqa: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rdfqa: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rdfqa: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace detail

inline std::string renderReport(const MetricReport& r, OutputFormat format, const Dataset* d) {
  std::ostringstream s;
  switch (format) {
    case OutputFormat::Json: writeReportJson(r, s, d); break;
    case OutputFormat::Csv: writeReportsCsv({r}, s); break;
    case OutputFormat::Table: writeReportsTable({r}, s); break;
  }
  return s.str();
}

inline int cmdAssess(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputPaths.size() != 1) {
    err << "rdfqa assess: expected exactly one dataset\n";
    return kExitUsage;
  }
  if (!detail::requireReadable(detail::declaredInputs(cfg), err)) return kExitInput;
  return detail::guarded(err, [&] {
    auto d = loadDataset(cfg.inputPaths.front());
    if (cfg.schemaPath) d = mergeDatasets(loadDataset(*cfg.schemaPath), d);
    const auto dict = detail::loadDictionary(cfg);
    AssessOptions options;
    if (cfg.metricSelection) options.selection = *cfg.metricSelection;
    options.offenderCap = cfg.offenderCap.value_or(kDefaultOffenderCap);
    options.parallel = cfg.parallel;
    const auto report = assess(d, dict, options);
    for (const auto& f : report.flags) err << "rdfqa: warning: " << f << '\n';
    emit(cfg, renderReport(report, cfg.format.value_or(OutputFormat::Json), &d), out);
    return kExitOk;
  });
}

// The manifest sits next to the output: out/dirty.nt -> out/dirty.manifest.json.
inline fs::path manifestPathFor(const fs::path& output) {
  return output.parent_path() / (output.stem().string() + ".manifest.json");
}

inline int cmdContaminate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)out;
  if (cfg.inputPaths.size() != 1 || !cfg.planPath || !cfg.outputPath) {
    err << "rdfqa contaminate: expected one dataset, --plan and -o\n";
    return kExitUsage;
  }
  if (!detail::requireReadable(detail::declaredInputs(cfg), err)) return kExitInput;
  return detail::guarded(err, [&] {
    std::ifstream planIn(*cfg.planPath);
    auto plan = readPlanJson(planIn);
    if (cfg.seedOverride) plan.seed = *cfg.seedOverride;
    auto d = loadDataset(cfg.inputPaths.front());
    if (cfg.schemaPath) d = mergeDatasets(loadDataset(*cfg.schemaPath), d);
    if (!plan.datasetId.empty() && plan.datasetId != d.id()) {
      err << "rdfqa: warning: plan is for '" << plan.datasetId << "', dataset is '" << d.id() << "'\n";
    }
    const auto dict = detail::loadDictionary(cfg);
    const auto result = contaminate(d, plan, dict);
    for (const auto& w : result.manifest.warnings) err << "rdfqa: warning: " << w << '\n';

    std::ostringstream data;
    serializeDataset(result.dataset, data);
    std::ostringstream manifest;
    writeManifestJson(result.manifest, manifest);
    const auto manifestPath = manifestPathFor(*cfg.outputPath);
    writeFileAtomic(*cfg.outputPath, data.str());
    try {
      writeFileAtomic(manifestPath, manifest.str());
    } catch (...) {
      std::error_code ec;
      fs::remove(*cfg.outputPath, ec);
      throw;
    }
    return kExitOk;
  });
}

inline int cmdCompare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputPaths.size() != 2) {
    err << "rdfqa compare: expected <before.json> <after.json>\n";
    return kExitUsage;
  }
  if (!detail::requireReadable(detail::declaredInputs(cfg), err)) return kExitInput;
  return detail::guarded(err, [&] {
    const auto before = detail::loadReport(cfg.inputPaths[0]);
    const auto after = detail::loadReport(cfg.inputPaths[1]);
    const auto delta = computeDelta(before, after);
    std::optional<ContaminationManifest> manifest;
    if (cfg.manifestPath) {
      std::ifstream in(*cfg.manifestPath);
      manifest = readManifestJson(in);
    }
    std::ostringstream s;
    switch (cfg.format.value_or(OutputFormat::Table)) {
      case OutputFormat::Table:
        renderDeltaTable(delta, s);
        if (manifest) {
          s << '\n';
          renderTrendCounts(renderTrendTable(delta, *manifest, s), s);
        }
        break;
      case OutputFormat::Json: {
        auto j = deltaToJson(delta);
        if (manifest) j["achieved"] = manifestToJson(*manifest)["achieved"];
        s << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv: {
        MetricReport row;
        row.datasetId = delta.datasetId;
        for (const auto& [id, v] : delta.delta) {
          MetricValue mv;
          mv.id = id;
          mv.value = v;
          row.metrics.emplace(id, std::move(mv));
        }
        writeReportsCsv({row}, s);
        break;
      }
    }
    emit(cfg, s.str(), out);
    return kExitOk;
  });
}

inline int cmdCorrelate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!detail::requireReadable(detail::declaredInputs(cfg), err)) return kExitInput;
  return detail::guarded(err, [&] {
    const auto reports = detail::loadReports(cfg.inputPaths);
    if (reports.size() < 3) {
      err << "rdfqa correlate: needs at least 3 reports, got " << reports.size() << '\n';
      return kExitUsage;
    }
    const auto method = cfg.exactP ? PValueMethod::ExactPermutation : PValueMethod::TApproximation;
    const auto matrix = correlationMatrix(reports, cfg.alpha.value_or(0.05), method);
    const auto format = cfg.format.value_or(OutputFormat::Table);
    std::ostringstream s;
    if (format == OutputFormat::Table) {
      renderCorrelationText(matrix, out);
      if (!cfg.outputPath) return kExitOk;
      // Text goes to the terminal, the machine-readable matrix to the file.
      if (cfg.outputPath->extension() == ".csv") {
        renderCorrelationCsv(matrix, s);
      } else {
        s << correlationToJson(matrix).dump(2) << '\n';
      }
    } else if (format == OutputFormat::Csv) {
      renderCorrelationCsv(matrix, s);
    } else {
      s << correlationToJson(matrix).dump(2) << '\n';
    }
    emit(cfg, s.str(), out);
    return kExitOk;
  });
}

inline int cmdSummarize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputPaths.empty()) {
    err << "rdfqa summarize: expected at least one report\n";
    return kExitUsage;
  }
  if (!detail::requireReadable(detail::declaredInputs(cfg), err)) return kExitInput;
  return detail::guarded(err, [&] {
    const auto rows = summarize(detail::loadReports(cfg.inputPaths));
    std::ostringstream s;
    if (cfg.format.value_or(OutputFormat::Table) == OutputFormat::Table) {
      renderSummaryTable(rows, s);
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        j.push_back({{"metric", metricCode(r.metricId)}, {"mean", r.mean}, {"stdev", r.stdev}});
      }
      s << j.dump(2) << '\n';
    }
    emit(cfg, s.str(), out);
    return kExitOk;
  });
}

inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  switch (cfg.command) {
    case Command::Assess: return cmdAssess(cfg, out, err);
    case Command::Contaminate: return cmdContaminate(cfg, out, err);
    case Command::Compare: return cmdCompare(cfg, out, err);
    case Command::Correlate: return cmdCorrelate(cfg, out, err);
    case Command::Summarize: return cmdSummarize(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace rdfqa::cli
