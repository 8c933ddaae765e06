// Copyright 2026 The misub Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: bases, rank, eval, diff and synth subcommands.
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 numeric
// failure.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "misub/config.h"
#include "misub/dataset.h"
#include "misub/error.h"
#include "misub/experiment.h"
#include "misub/mutual_information.h"
#include "misub/report.h"
#include "misub/synth_demo.h"
#include "misub/transforms.h"

namespace {

using misub::Error;
using misub::ErrorKind;

struct DataArgs {
  std::string data;
  std::string label = "label";
  std::string transform;
  std::uint64_t seed = 0;
  std::optional<double> ridge;
  bool standardize = false;
  std::size_t dim = 0;
};

void AddDataOptions(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.data, "CSV file with one header row");
  cmd->add_option("--label", args.label, "Name of the label column");
  cmd->add_option("--transform", args.transform, "DCT, PCA, LDA or RP")
      ->required();
  cmd->add_option("--seed", args.seed, "Experiment seed (RP matrix)");
  cmd->add_option("--ridge", args.ridge, "LDA ridge (default 1e-6*tr(Sw)/d)");
  cmd->add_flag("--standardize", args.standardize,
                "z-score features before fitting");
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    misub::WriteTextFile(path, text);
  }
}

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Fits the requested transform on the whole dataset (these subcommands have
// no train/test split).
misub::FittedTransform FitOnData(const DataArgs& args, std::size_t bins,
                                 misub::Dataset& ds_out) {
  if (args.data.empty()) {
    throw Error(ErrorKind::kConfig, "--data is required");
  }
  ds_out = misub::LoadCsv(args.data, args.label);
  misub::FitOptions options;
  options.bins = bins;
  options.ridge = args.ridge;
  options.standardize = args.standardize;
  options.rp_seed = misub::RpSeed(args.seed);
  return misub::FitTransform(misub::ParseTransformKind(args.transform),
                             ds_out.features(), ds_out.labels(), options);
}

int RunBases(const DataArgs& args, const std::string& out) {
  const auto kind = misub::ParseTransformKind(args.transform);
  if (args.data.empty() &&
      (kind == misub::TransformKind::kDct || kind == misub::TransformKind::kRp)) {
    if (args.dim == 0) {
      throw Error(ErrorKind::kConfig, "--dim or --data is required");
    }
    const misub::BasisSet basis =
        kind == misub::TransformKind::kDct
            ? misub::DctBasis(args.dim)
            : misub::RpBasis(args.dim, misub::RpSeed(args.seed));
    Emit(out, misub::BasisCsv(basis));
    return 0;
  }
  misub::Dataset ds;
  const auto fit = FitOnData(args, 0, ds);
  Emit(out, misub::BasisCsv(fit.basis));
  return 0;
}

int RunRank(const DataArgs& args, std::size_t bins, const std::string& out) {
  misub::Dataset ds;
  const auto fit = FitOnData(args, bins, ds);
  Emit(out, misub::RankingCsv(fit.ranking));
  return 0;
}

std::vector<std::size_t> ParseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kConfig, "bad index '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual-information selection of subspace bases"};
  app.require_subcommand(1);

  DataArgs bases_args;
  std::string bases_out;
  auto* bases = app.add_subcommand("bases", "Emit a basis set as CSV");
  AddDataOptions(bases, bases_args);
  bases->add_option("--dim", bases_args.dim,
                    "Dimension for DCT/RP when no data is given");
  bases->add_option("--out", bases_out, "Output file (default stdout)");

  DataArgs rank_args;
  std::size_t rank_bins = 0;
  std::string rank_out;
  auto* rank = app.add_subcommand("rank", "Rank a basis set by MI with labels");
  AddDataOptions(rank, rank_args);
  rank->add_option("--bins", rank_bins, "Histogram bins (0: ceil(sqrt(N)))");
  rank->add_option("--out", rank_out, "Output file (default stdout)");

  std::string config_path;
  std::string format = "csv";
  std::string eval_out;
  std::string diff_out;
  std::string detail_out;
  bool timestamp = false;
  std::vector<std::pair<std::string, std::string>> overrides;
  auto* eval = app.add_subcommand("eval", "Run a conventional-vs-MI experiment");
  eval->add_option("--config", config_path, "key=value experiment config");
  eval->add_option("--format", format, "csv or markdown");
  eval->add_option("--out", eval_out, "Report file (default stdout)");
  eval->add_option("--diff-out", diff_out, "Basis-difference CSV");
  eval->add_option("--detail-out", detail_out, "Per-repeat accuracy CSV");
  eval->add_flag("--timestamp", timestamp,
                 "Stamp the report with the current UTC time");
  for (const char* key :
       {"data", "label_column", "transforms", "selectors", "fractions",
        "classifiers", "bins", "repeats", "train_fraction", "seed",
        "stratified", "standardize", "ridge", "knn_neighbors"}) {
    std::string flag = std::string("--") + key;
    for (char& c : flag) c = c == '_' ? '-' : c;
    eval->add_option_function<std::string>(
        flag,
        [&overrides, key](const std::string& v) {
          overrides.emplace_back(key, v);
        },
        std::string("Override config key ") + key);
  }

  std::string conv_list;
  std::string mi_list;
  auto* diff = app.add_subcommand("diff", "Percent of MI-selected bases not in "
                                          "the conventional selection");
  diff->add_option("--conv", conv_list, "Conventional top-k indices, e.g. 0,1,2")
      ->required();
  diff->add_option("--mi", mi_list, "MI top-k indices")->required();

  std::uint64_t synth_seed = 0;
  std::size_t synth_bins = 10;
  std::string synth_dir = ".";
  auto* synth = app.add_subcommand("synth", "Two-Gaussian PCA demonstration");
  synth->add_option("--seed", synth_seed, "Seed for data and splits");
  synth->add_option("--bins", synth_bins, "Histogram bins");
  synth->add_option("--out-dir", synth_dir, "Directory for output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return misub::ExitCodeFor(ErrorKind::kConfig);
  }

  try {
    if (*bases) return RunBases(bases_args, bases_out);
    if (*rank) return RunRank(rank_args, rank_bins, rank_out);
    if (*eval) {
      misub::ExperimentConfig cfg;
      if (!config_path.empty()) cfg = misub::LoadConfig(config_path);
      for (const auto& [key, value] : overrides) {
        misub::ApplyConfigValue(cfg, key, value);
        if (key == "data") cfg.synth.reset();
      }
      const auto report_format = misub::ParseReportFormat(format);
      misub::ExperimentReport report = misub::RunExperiment(cfg);
      if (timestamp) report.metadata.timestamp = UtcNow();
      Emit(eval_out, misub::RenderReport(report, report_format));
      if (!diff_out.empty()) Emit(diff_out, misub::BasisDifferenceCsv(report));
      if (!detail_out.empty()) Emit(detail_out, misub::ReportDetailCsv(report));
      return 0;
    }
    if (*diff) {
      const double percent = misub::BasisDifference(ParseIndexList(conv_list),
                                                    ParseIndexList(mi_list));
      std::cout << std::fixed << std::setprecision(2) << percent << '\n';
      return 0;
    }
    if (*synth) {
      const misub::SynthDemoResult result =
          misub::RunSynthDemo(synth_seed, synth_bins);
      const std::filesystem::path dir(synth_dir);
      std::filesystem::create_directories(dir);
      misub::EmitReport(result.report, misub::ReportFormat::kMarkdown,
                        dir / "synth_report.md");
      misub::WriteTextFile(dir / "synth_projections.csv",
                           misub::ProjectionCsv(result));
      const std::string summary = misub::SynthSummary(result);
      misub::WriteTextFile(dir / "synth_summary.csv", summary);
      std::cout << summary;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "misub: " << misub::ToString(e.kind()) << ": " << e.what()
              << '\n';
    return misub::ExitCodeFor(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "misub: " << e.what() << '\n';
    return misub::ExitCodeFor(ErrorKind::kIo);
  }
  return 0;
}
