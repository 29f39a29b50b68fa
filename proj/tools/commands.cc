// Copyright 2026 The Authors.
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

#include "commands.h"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "json.hpp"
#include "kregret/analysis.h"
#include "kregret/data_io.h"
#include "kregret/selection.h"
#include "kregret/skyline.h"

namespace kregret::cli {
namespace {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

constexpr char kWorkersEnv[] = "KREGRET_WORKERS";

int WorkersFromEnv() {
  const char* value = std::getenv(kWorkersEnv);
  if (value == nullptr) return 1;
  const int workers = std::atoi(value);
  return workers > 0 ? workers : 1;
}

std::string FormatDouble(double x) { return absl::StrFormat("%.10g", x); }

std::string JoinIds(const std::vector<PointId>& ids) {
  return absl::StrJoin(ids, " ");
}

// Writes to `path`, or to `fallback` when path is empty or "-".
absl::Status Emit(const std::string& path, const std::string& text,
                  std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return absl::OkStatus();
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return absl::PermissionDeniedError("cannot write " + path);
  file << text;
  return file ? absl::OkStatus()
              : absl::DataLossError("write failed for " + path);
}

absl::StatusOr<UtilityClass> ParseClassSpec(const std::string& spec,
                                            std::optional<int> decimals) {
  if (spec == "full") {
    if (decimals.has_value()) {
      return absl::InvalidArgumentError(
          "--decimals only applies to a finite utility class");
    }
    return UtilityClass::FullLinear();
  }
  if (!absl::StartsWith(spec, "file:")) {
    return absl::InvalidArgumentError(
        "--class must be 'full' or 'file:<path>'");
  }
  auto rows = ReadCsv(spec.substr(5));
  if (!rows.ok()) return rows.status();
  std::vector<UtilityVector> vectors;
  for (const Point& row : rows->points()) {
    auto v = UtilityVector::Create(row.coords);
    if (!v.ok()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "utility row %d: %s", row.id + 1, v.status().message()));
    }
    vectors.push_back(*std::move(v));
  }
  return UtilityClass::Finite(std::move(vectors), UtilityPrecision{decimals});
}

struct Prepared {
  Dataset candidates;
  int64_t input_size = 0;
  double preprocess_ms = 0.0;
};

absl::StatusOr<Prepared> Prepare(const Dataset& raw, bool skyline,
                                 bool normalize) {
  const auto start = Clock::now();
  Prepared out;
  out.input_size = static_cast<int64_t>(raw.size());
  Dataset current = raw;
  if (skyline) {
    auto sky = ComputeSkyline(current);
    if (!sky.ok()) return sky.status();
    current = *std::move(sky);
  }
  if (normalize) {
    auto scaled = Normalize(current);
    if (!scaled.ok()) return scaled.status();
    current = *std::move(scaled);
  }
  out.candidates = std::move(current);
  out.preprocess_ms = Millis(Clock::now() - start).count();
  return out;
}

absl::StatusOr<SelectionResult> RunAlgorithm(const std::string& algo,
                                             const Dataset& candidates, int k,
                                             const UtilityClass& utilities,
                                             double eps, double lambda,
                                             uint64_t seed,
                                             const SelectionOptions& options) {
  if (algo == "presgreed") {
    return PresGreed(candidates, k, utilities, options);
  }
  if (algo == "stocpresgreed") {
    StochasticOptions stochastic;
    stochastic.epsilon = eps;
    stochastic.lambda = lambda;
    stochastic.seed = seed;
    return StocPresGreed(candidates, k, utilities, stochastic, options);
  }
  if (algo == "greedy") return NaiveGreedy(candidates, k, utilities, options);
  return absl::InvalidArgumentError("unknown algorithm " + algo);
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status << "\n";
  return 1;
}

// gen ------------------------------------------------------------------------

struct GenFlags {
  int64_t n = 0;
  int d = 0;
  uint64_t seed = 0;
  std::string kind = "anti";
  std::string output;
};

void AddGen(CLI::App& app, GenFlags& flags) {
  CLI::App* cmd = app.add_subcommand("gen", "Write a synthetic dataset as CSV");
  cmd->add_option("-n", flags.n, "Number of points")
      ->required()
      ->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
  cmd->add_option("-d", flags.d, "Dimensionality")
      ->required()
      ->check(CLI::Range(1, 1024));
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--kind", flags.kind, "anti or uniform")
      ->check(CLI::IsMember({"anti", "uniform"}));
  cmd->add_option("-o,--output", flags.output, "Output path (default stdout)");
}

int RunGen(const GenFlags& flags, std::ostream& out, std::ostream& err) {
  auto data = flags.kind == "anti"
                  ? GenerateAntiCorrelated(flags.n, flags.d, flags.seed)
                  : GenerateUniform(flags.n, flags.d, flags.seed);
  if (!data.ok()) return Fail(err, data.status());
  if (absl::Status s = Emit(flags.output, FormatCsv(*data), out); !s.ok()) {
    return Fail(err, s);
  }
  return 0;
}

// select ---------------------------------------------------------------------

struct SelectFlags {
  std::string input;
  int k = 0;
  std::string algo = "presgreed";
  double eps = 0.1;
  double lambda = 1.1;
  uint64_t seed = 0;
  std::string class_spec = "full";
  std::optional<int> decimals;
  bool no_skyline = false;
  bool no_normalize = false;
  int preselect_dim = 0;
  std::string output;
  std::string trace;
};

const std::vector<std::string> kAlgorithms = {"greedy", "presgreed",
                                              "stocpresgreed"};

void AddSelect(CLI::App& app, SelectFlags& flags) {
  CLI::App* cmd = app.add_subcommand(
      "select", "Skyline, normalize, then pick k representative points");
  cmd->add_option("-i,--input", flags.input, "Input CSV")->required();
  cmd->add_option("-k", flags.k, "Result size")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--algo", flags.algo, "greedy, presgreed or stocpresgreed")
      ->check(CLI::IsMember(kAlgorithms));
  cmd->add_option("--eps", flags.eps, "Sampling accuracy (stocpresgreed)")
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--lambda", flags.lambda, "Sample factor (stocpresgreed)")
      ->check(CLI::Range(1.0, 1e12));
  cmd->add_option("--seed", flags.seed, "Sampling seed");
  cmd->add_option("--class", flags.class_spec,
                  "Utility class: 'full' or 'file:<path>'");
  cmd->add_option("--decimals", flags.decimals,
                  "Round finite-class utility scores to this many decimals")
      ->check(CLI::Range(0, 15));
  cmd->add_flag("--no-skyline", flags.no_skyline, "Skip skyline filtering");
  cmd->add_flag("--no-normalize", flags.no_normalize, "Skip normalization");
  cmd->add_option("--preselect-dim", flags.preselect_dim,
                  "Dimension whose maximizer seeds the greedy")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("-o,--output", flags.output, "Result CSV (default stdout)");
  cmd->add_option("--trace", flags.trace, "Write the greedy trace here");
}

constexpr char kSelectHeader[] =
    "algo,k,input_size,candidates,selected_ids,min_happiness,max_regret,"
    "lp_count,time_ms,preprocess_ms,truncated,eps,lambda,seed,class\n";

int RunSelect(const SelectFlags& flags, const std::string& command_line,
              std::ostream& out, std::ostream& err) {
  if (flags.algo != "stocpresgreed" && (flags.eps != 0.1 || flags.lambda != 1.1)) {
    err << "error: --eps/--lambda only apply to --algo stocpresgreed\n";
    return 2;
  }
  auto utilities = ParseClassSpec(flags.class_spec, flags.decimals);
  if (!utilities.ok()) {
    err << "error: " << utilities.status().message() << "\n";
    return 2;
  }
  auto raw = ReadCsv(flags.input);
  if (!raw.ok()) return Fail(err, raw.status());
  auto prepared = Prepare(*raw, !flags.no_skyline, !flags.no_normalize);
  if (!prepared.ok()) return Fail(err, prepared.status());

  SelectionOptions options;
  options.preselect_dimension = flags.preselect_dim;
  options.workers = WorkersFromEnv();
  auto result = RunAlgorithm(flags.algo, prepared->candidates, flags.k,
                             *utilities, flags.eps, flags.lambda, flags.seed,
                             options);
  if (!result.ok()) return Fail(err, result.status());

  const bool stochastic = flags.algo == "stocpresgreed";
  std::string csv = kSelectHeader;
  csv += absl::StrFormat(
      "%s,%d,%d,%d,%s,%s,%s,%d,%s,%s,%d,%s,%s,%d,%s\n", flags.algo, flags.k,
      prepared->input_size, prepared->candidates.size(),
      JoinIds(result->selected_ids), FormatDouble(result->min_happiness),
      FormatDouble(result->max_regret), result->trace.lp_evaluations,
      FormatDouble(result->trace.elapsed.count()),
      FormatDouble(prepared->preprocess_ms), result->truncated ? 1 : 0,
      stochastic ? FormatDouble(flags.eps) : "",
      stochastic ? FormatDouble(flags.lambda) : "", flags.seed,
      flags.class_spec);
  if (absl::Status s = Emit(flags.output, csv, out); !s.ok()) {
    return Fail(err, s);
  }

  if (!flags.trace.empty()) {
    std::string text = "# kregret " + command_line + "\n";
    text += "step,chosen_id,restricted_happiness,marginal_gain\n";
    for (const GreedyStep& step : result->trace.steps) {
      text += absl::StrFormat(
          "%d,%d,%s,%s\n", step.index, step.chosen,
          step.restricted_happiness ? FormatDouble(*step.restricted_happiness)
                                    : "",
          step.marginal_gain ? FormatDouble(*step.marginal_gain) : "");
    }
    text += absl::StrFormat("# lp_evaluations=%d elapsed_ms=%s\n",
                            result->trace.lp_evaluations,
                            FormatDouble(result->trace.elapsed.count()));
    if (absl::Status s = Emit(flags.trace, text, out); !s.ok()) {
      return Fail(err, s);
    }
  }
  return 0;
}

// bench ----------------------------------------------------------------------

struct BenchFlags {
  std::string input;
  int64_t gen_n = 0;
  int gen_d = 0;
  uint64_t gen_seed = 0;
  std::string gen_kind = "anti";
  std::vector<int> ks;
  int repeats = 1;
  std::vector<std::string> algos = {"presgreed", "stocpresgreed"};
  std::vector<double> eps_grid = {0.1};
  std::vector<double> lambda_grid = {1.1};
  uint64_t seed = 0;
  std::string class_spec = "full";
  std::optional<int> decimals;
  bool parallel = false;
  std::string output;
};

void AddBench(CLI::App& app, BenchFlags& flags) {
  CLI::App* cmd = app.add_subcommand(
      "bench", "Sweep k, algorithms and sampling parameters; long-format CSV");
  auto* input = cmd->add_option("-i,--input", flags.input, "Input CSV");
  auto* gen_n = cmd->add_option("--gen-n", flags.gen_n,
                                "Generate this many points instead of -i")
                    ->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
  cmd->add_option("--gen-d", flags.gen_d, "Generated dimensionality")
      ->check(CLI::Range(1, 1024));
  cmd->add_option("--gen-seed", flags.gen_seed, "Generator seed");
  cmd->add_option("--gen-kind", flags.gen_kind, "anti or uniform")
      ->check(CLI::IsMember({"anti", "uniform"}));
  input->excludes(gen_n);
  gen_n->excludes(input);
  cmd->add_option("--k", flags.ks, "Comma-separated k values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd->add_option("--repeats", flags.repeats, "Runs per cell")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--algos", flags.algos, "Comma-separated algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgorithms));
  cmd->add_option("--eps", flags.eps_grid, "Comma-separated eps grid")
      ->delimiter(',')
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--lambda", flags.lambda_grid, "Comma-separated lambda grid")
      ->delimiter(',')
      ->check(CLI::Range(1.0, 1e12));
  cmd->add_option("--seed", flags.seed, "Base seed; repeat r uses seed + r");
  cmd->add_option("--class", flags.class_spec,
                  "Utility class: 'full' or 'file:<path>'");
  cmd->add_option("--decimals", flags.decimals,
                  "Round finite-class utility scores")
      ->check(CLI::Range(0, 15));
  cmd->add_flag("--parallel", flags.parallel,
                "Run cells concurrently (each cell still timed alone)");
  cmd->add_option("-o,--output", flags.output, "Output CSV (default stdout)");
}

constexpr char kBenchHeader[] =
    "dataset,algo,k,eps,lambda,repeat,seed,candidates,min_happiness,regret,"
    "time_ms,lp_count,error\n";

struct BenchCell {
  std::string algo;
  int k = 0;
  std::optional<double> eps;
  std::optional<double> lambda;
  int repeat = 0;
  uint64_t seed = 0;
};

int RunBench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.input.empty() && flags.gen_n == 0) {
    err << "error: bench needs -i or --gen-n\n";
    return 2;
  }
  if (flags.gen_n > 0 && flags.gen_d < 2) {
    err << "error: --gen-n needs --gen-d >= 2\n";
    return 2;
  }
  auto utilities = ParseClassSpec(flags.class_spec, flags.decimals);
  if (!utilities.ok()) {
    err << "error: " << utilities.status().message() << "\n";
    return 2;
  }
  std::string dataset_name;
  absl::StatusOr<Dataset> raw;
  if (!flags.input.empty()) {
    dataset_name = flags.input;
    raw = ReadCsv(flags.input);
  } else {
    dataset_name = absl::StrFormat("%s(n=%d;d=%d;seed=%d)", flags.gen_kind,
                                   flags.gen_n, flags.gen_d, flags.gen_seed);
    raw = flags.gen_kind == "anti"
              ? GenerateAntiCorrelated(flags.gen_n, flags.gen_d, flags.gen_seed)
              : GenerateUniform(flags.gen_n, flags.gen_d, flags.gen_seed);
  }
  if (!raw.ok()) return Fail(err, raw.status());
  auto prepared = Prepare(*raw, true, true);
  if (!prepared.ok()) return Fail(err, prepared.status());

  std::vector<BenchCell> cells;
  for (const std::string& algo : flags.algos) {
    for (int k : flags.ks) {
      if (algo == "stocpresgreed") {
        for (double eps : flags.eps_grid) {
          for (double lambda : flags.lambda_grid) {
            for (int r = 0; r < flags.repeats; ++r) {
              cells.push_back({algo, k, eps, lambda, r, flags.seed + r});
            }
          }
        }
      } else {
        for (int r = 0; r < flags.repeats; ++r) {
          cells.push_back({algo, k, std::nullopt, std::nullopt, r,
                           flags.seed + r});
        }
      }
    }
  }

  SelectionOptions options;
  options.record_gains = false;
  options.workers = WorkersFromEnv();
  const Dataset& candidates = prepared->candidates;
  auto run_cell = [&](const BenchCell& cell) {
    auto result = RunAlgorithm(cell.algo, candidates, cell.k, *utilities,
                               cell.eps.value_or(0.1),
                               cell.lambda.value_or(1.1), cell.seed, options);
    const std::string eps = cell.eps ? FormatDouble(*cell.eps) : "";
    const std::string lambda = cell.lambda ? FormatDouble(*cell.lambda) : "";
    if (!result.ok()) {
      std::string message(result.status().message());
      for (char& c : message) {
        if (c == ',' || c == '\n') c = ';';
      }
      return absl::StrFormat("%s,%s,%d,%s,%s,%d,%d,%d,,,,,%s\n", dataset_name,
                             cell.algo, cell.k, eps, lambda, cell.repeat,
                             cell.seed, candidates.size(), message);
    }
    return absl::StrFormat(
        "%s,%s,%d,%s,%s,%d,%d,%d,%s,%s,%s,%d,\n", dataset_name, cell.algo,
        cell.k, eps, lambda, cell.repeat, cell.seed, candidates.size(),
        FormatDouble(result->min_happiness), FormatDouble(result->max_regret),
        FormatDouble(result->trace.elapsed.count()),
        result->trace.lp_evaluations);
  };

  std::vector<std::string> rows(cells.size());
  if (flags.parallel) {
    std::vector<std::future<std::string>> pending;
    pending.reserve(cells.size());
    for (const BenchCell& cell : cells) {
      pending.push_back(std::async(std::launch::async, run_cell, cell));
    }
    for (size_t i = 0; i < cells.size(); ++i) rows[i] = pending[i].get();
  } else {
    for (size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(cells[i]);
  }

  std::string csv = kBenchHeader;
  for (const std::string& row : rows) csv += row;
  if (absl::Status s = Emit(flags.output, csv, out); !s.ok()) {
    return Fail(err, s);
  }
  return 0;
}

// analyze --------------------------------------------------------------------

struct AnalyzeFlags {
  std::string input;
  int k = 0;
  int64_t budget = kDefaultSubsetBudget;
  int64_t oracle_budget = kDefaultOracleBudget;
  uint64_t seed = 0;
  double eps = 0.1;
  double lambda = 1.1;
  std::string class_spec = "full";
  std::optional<int> decimals;
  bool no_optimal = false;
  bool no_skyline = false;
  bool no_normalize = false;
  std::string output;
  std::string csv;
};

void AddAnalyze(CLI::App& app, AnalyzeFlags& flags) {
  CLI::App* cmd = app.add_subcommand(
      "analyze",
      "Estimate greedy submodularity ratio and curvature, evaluate bounds");
  cmd->add_option("-i,--input", flags.input, "Input CSV")->required();
  cmd->add_option("-k", flags.k, "Result size (2..6 recommended)")
      ->required()
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--budget", flags.budget, "Max T-subsets to evaluate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-budget", flags.oracle_budget,
                  "Max subsets for the exhaustive optimum")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed, "Subset sampling seed");
  cmd->add_option("--eps", flags.eps, "eps for the sampling bound")
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--lambda", flags.lambda, "lambda for the sampling bound")
      ->check(CLI::Range(1.0, 1e12));
  cmd->add_option("--class", flags.class_spec,
                  "Utility class: 'full' or 'file:<path>'");
  cmd->add_option("--decimals", flags.decimals,
                  "Round finite-class utility scores")
      ->check(CLI::Range(0, 15));
  cmd->add_flag("--no-optimal", flags.no_optimal, "Skip the exhaustive oracle");
  cmd->add_flag("--no-skyline", flags.no_skyline, "Skip skyline filtering");
  cmd->add_flag("--no-normalize", flags.no_normalize, "Skip normalization");
  cmd->add_option("-o,--output", flags.output, "JSON report (default stdout)");
  cmd->add_option("--csv", flags.csv, "Also write a one-row CSV report");
}

nlohmann::json EstimateJson(const RatioEstimate& e) {
  return {{"value", e.value},
          {"vacuous", e.vacuous},
          {"mode", std::string(SubsetModeName(e.mode))},
          {"pairs_evaluated", e.pairs_evaluated}};
}

int RunAnalyze(const AnalyzeFlags& flags, const std::string& command_line,
               std::ostream& out, std::ostream& err) {
  if (flags.k > 6) {
    err << "warning: k > 6 makes the ratio estimates expensive\n";
  }
  auto utilities = ParseClassSpec(flags.class_spec, flags.decimals);
  if (!utilities.ok()) {
    err << "error: " << utilities.status().message() << "\n";
    return 2;
  }
  auto raw = ReadCsv(flags.input);
  if (!raw.ok()) return Fail(err, raw.status());
  auto prepared = Prepare(*raw, !flags.no_skyline, !flags.no_normalize);
  if (!prepared.ok()) return Fail(err, prepared.status());

  AnalysisOptions options;
  options.subset_budget = flags.budget;
  options.oracle_budget = flags.oracle_budget;
  options.seed = flags.seed;
  options.epsilon = flags.eps;
  options.lambda = flags.lambda;
  options.run_optimal = !flags.no_optimal;
  options.selection.record_gains = false;
  options.selection.workers = WorkersFromEnv();
  auto report = Analyze(prepared->candidates, flags.k, *utilities, options);
  if (!report.ok()) return Fail(err, report.status());

  nlohmann::json json = {
      {"command", command_line},
      {"k", report->k},
      {"candidates", prepared->candidates.size()},
      {"presgreed_ids", report->presgreed_ids},
      {"presgreed_value", report->presgreed_value},
      {"gamma_g", EstimateJson(report->gamma)},
      {"alpha_g", EstimateJson(report->alpha)},
      {"subset_mode", std::string(SubsetModeName(report->subset_mode))},
      {"subset_count", report->subset_count},
      {"subset_budget", report->subset_budget},
      {"seed", report->seed},
      {"epsilon", report->epsilon},
      {"lambda", report->lambda},
      {"presgreed_bound", report->presgreed_bound},
      {"stoc_bound", report->stoc_bound},
      {"optimal_value", nullptr},
      {"optimal_ids", nullptr},
      {"presgreed_bound_holds", nullptr},
  };
  if (report->optimal_value) json["optimal_value"] = *report->optimal_value;
  if (report->optimal_ids) json["optimal_ids"] = *report->optimal_ids;
  if (report->presgreed_bound_holds) {
    json["presgreed_bound_holds"] = *report->presgreed_bound_holds;
  }
  if (absl::Status s = Emit(flags.output, json.dump(2) + "\n", out); !s.ok()) {
    return Fail(err, s);
  }

  if (!flags.csv.empty()) {
    std::string csv =
        "k,candidates,presgreed_value,gamma_g,gamma_vacuous,alpha_g,"
        "alpha_vacuous,subset_mode,subset_count,presgreed_bound,stoc_bound,"
        "optimal_value,presgreed_bound_holds\n";
    csv += absl::StrFormat(
        "%d,%d,%s,%s,%d,%s,%d,%s,%d,%s,%s,%s,%s\n", report->k,
        prepared->candidates.size(), FormatDouble(report->presgreed_value),
        FormatDouble(report->gamma.value), report->gamma.vacuous ? 1 : 0,
        FormatDouble(report->alpha.value), report->alpha.vacuous ? 1 : 0,
        std::string(SubsetModeName(report->subset_mode)), report->subset_count,
        FormatDouble(report->presgreed_bound),
        FormatDouble(report->stoc_bound),
        report->optimal_value ? FormatDouble(*report->optimal_value) : "",
        report->presgreed_bound_holds
            ? (*report->presgreed_bound_holds ? "1" : "0")
            : "");
    if (absl::Status s = Emit(flags.csv, csv, out); !s.ok()) {
      return Fail(err, s);
    }
  }
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"k-regret minimization queries"};
  app.name("kregret");
  app.require_subcommand(1);
  GenFlags gen;
  SelectFlags select;
  BenchFlags bench;
  AnalyzeFlags analyze;
  AddGen(app, gen);
  AddSelect(app, select);
  AddBench(app, bench);
  AddAnalyze(app, analyze);

  std::vector<const char*> argv = {"kregret"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string command_line = absl::StrJoin(args, " ");
  if (app.got_subcommand("gen")) return RunGen(gen, out, err);
  if (app.got_subcommand("select")) {
    return RunSelect(select, command_line, out, err);
  }
  if (app.got_subcommand("bench")) return RunBench(bench, out, err);
  return RunAnalyze(analyze, command_line, out, err);
}

}  // namespace kregret::cli
