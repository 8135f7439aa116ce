// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdfqa/cli.hpp"

namespace {

using rdfqa::cli::Command;
using rdfqa::cli::RunConfig;

struct RawOptions {
  std::vector<std::string> inputs;
  std::string schema, dictionary, plan, manifest, output, config, format, metrics;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::size_t offenderCap = 0;
  bool parallel = false;
  bool exactP = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rdfqa: intrinsic quality metrics for RDF datasets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rdfqa::kToolVersion));

  RawOptions raw;
  RunConfig cfg;
  std::string configPath;
  app.add_option("--config", configPath, "JSON file with default options");

  auto* assess = app.add_subcommand("assess", "Compute the quality metrics of a dataset");
  assess->add_option("dataset", raw.inputs, "N-Triples or Turtle file")->required()->expected(1);
  assess->add_option("--schema", raw.schema, "Separate schema file merged before indexing");
  assess->add_option("--dictionary", raw.dictionary, "Word list for the spelling metric");
  auto* metricsOpt = assess->add_option("--metrics", raw.metrics, "Comma-separated subset, e.g. M1,M7");
  auto* assessFormat = assess->add_option("--format", raw.format, "json, csv or table")
                           ->check(CLI::IsMember({"json", "csv", "table"}));
  assess->add_option("-o,--output", raw.output, "Output file (default: stdout)");
  auto* capOpt = assess->add_option("--offenders", raw.offenderCap, "Offender sample size per metric");
  assess->add_flag("--parallel", raw.parallel, "Evaluate metrics concurrently");

  auto* contam = app.add_subcommand("contaminate", "Inject defects according to a plan");
  contam->add_option("dataset", raw.inputs, "Clean dataset")->required()->expected(1);
  contam->add_option("--plan", raw.plan, "Plan JSON")->required();
  auto* seedOpt = contam->add_option("--seed", raw.seed, "Override the plan's seed");
  contam->add_option("--schema", raw.schema, "Separate schema file merged before contamination");
  contam->add_option("--dictionary", raw.dictionary, "Word list used by H4/H5");
  contam->add_option("-o,--output", raw.output, "Contaminated N-Triples output")->required();

  auto* compare = app.add_subcommand("compare", "Delta between two reports");
  compare->add_option("reports", raw.inputs, "<before.json> <after.json>")->required()->expected(2);
  compare->add_option("--manifest", raw.manifest, "Contamination manifest for the trend table");
  auto* compareFormat = compare->add_option("--format", raw.format, "json, csv or table")
                            ->check(CLI::IsMember({"json", "csv", "table"}));
  compare->add_option("-o,--output", raw.output, "Output file (default: stdout)");

  auto* correlate = app.add_subcommand("correlate", "Spearman correlation between metrics");
  correlate->add_option("reports", raw.inputs, "Report JSON files or CSV tables")->required();
  auto* alphaOpt = correlate->add_option("--alpha", raw.alpha, "Significance level")
                       ->check(CLI::Range(0.0, 1.0));
  auto* correlateFormat = correlate->add_option("--format", raw.format, "json, csv or table")
                              ->check(CLI::IsMember({"json", "csv", "table"}));
  correlate->add_option("-o,--output", raw.output, "Machine-readable output file");
  correlate->add_flag("--exact", raw.exactP, "Exact permutation p-values (n <= 10)");

  auto* summary = app.add_subcommand("summarize", "Mean and sample standard deviation per metric");
  summary->add_option("reports", raw.inputs, "Report JSON files or CSV tables")->required();
  auto* summaryFormat = summary->add_option("--format", raw.format, "json or table")
                            ->check(CLI::IsMember({"json", "table"}));
  summary->add_option("-o,--output", raw.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rdfqa::cli::kExitUsage;
  }

  if (assess->parsed()) cfg.command = Command::Assess;
  if (contam->parsed()) cfg.command = Command::Contaminate;
  if (compare->parsed()) cfg.command = Command::Compare;
  if (correlate->parsed()) cfg.command = Command::Correlate;
  if (summary->parsed()) cfg.command = Command::Summarize;

  for (const auto& p : raw.inputs) cfg.inputPaths.emplace_back(p);
  if (!raw.schema.empty()) cfg.schemaPath = raw.schema;
  if (!raw.dictionary.empty()) cfg.dictionaryPath = raw.dictionary;
  if (!raw.plan.empty()) cfg.planPath = raw.plan;
  if (!raw.manifest.empty()) cfg.manifestPath = raw.manifest;
  if (!raw.output.empty()) cfg.outputPath = raw.output;
  if (!configPath.empty()) cfg.configPath = configPath;
  for (auto* opt : {assessFormat, compareFormat, correlateFormat, summaryFormat}) {
    if (opt->count() > 0) cfg.format = rdfqa::cli::parseOutputFormat(raw.format);
  }
  if (metricsOpt->count() > 0) {
    cfg.metricSelection = rdfqa::cli::parseMetricList(raw.metrics);
    if (!cfg.metricSelection) {
      std::cerr << "rdfqa: --metrics expects names such as M1,M7\n";
      return rdfqa::cli::kExitUsage;
    }
  }
  if (alphaOpt->count() > 0) cfg.alpha = raw.alpha;
  if (seedOpt->count() > 0) cfg.seedOverride = raw.seed;
  if (capOpt->count() > 0) cfg.offenderCap = raw.offenderCap;
  cfg.parallel = raw.parallel;
  cfg.exactP = raw.exactP;

  try {
    rdfqa::cli::resolveDefaults(cfg);
  } catch (const std::exception& e) {
    std::cerr << "rdfqa: " << e.what() << '\n';
    return rdfqa::cli::kExitInput;
  }
  return rdfqa::cli::run(cfg);
}
