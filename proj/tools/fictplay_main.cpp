// Copyright 2026 The fictplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "fictplay/dynamics.hpp"
#include "fictplay/experiments.hpp"
#include "fictplay/generators.hpp"
#include "fictplay/io.hpp"
#include "fictplay/matrix_game.hpp"
#include "fictplay/population.hpp"
#include "fictplay/rng.hpp"
#include "fictplay/tiebreak.hpp"

namespace {

using fictplay::Algorithm;
using fictplay::Budget;
using fictplay::MatrixGame;
using fictplay::PlayMode;
using fictplay::RunTrace;
using fictplay::SeriesRecord;
using fictplay::TiebreakRule;
using ordered_json = nlohmann::ordered_json;

// Applies config-file values to flags the command line left unset, then
// rejects unknown keys. Command-line flags always win.
class ConfigMerger {
 public:
  ConfigMerger(const CLI::App& cmd, const std::string& path) : cmd_(cmd) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    try {
      cfg_ = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("config: parse error: ") + e.what());
    }
    if (!cfg_.is_object()) {
      throw std::invalid_argument("config: expected a JSON object");
    }
  }

  template <typename T>
  void Merge(const std::string& name, T* value) {
    seen_.insert(name);
    if (cfg_.is_null() || !cfg_.contains(name)) return;
    if (cmd_.count("--" + name) > 0) return;
    try {
      *value = cfg_.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument("config: bad value for key '" + name + "'");
    }
  }

  void Finish() const {
    if (cfg_.is_null()) return;
    for (const auto& item : cfg_.items()) {
      if (seen_.find(item.key()) == seen_.end()) {
        throw std::invalid_argument("config: unknown key '" + item.key() + "'");
      }
    }
  }

 private:
  const CLI::App& cmd_;
  nlohmann::json cfg_;
  std::set<std::string> seen_;
};

Algorithm ParseAlgorithm(const std::string& text) {
  if (text == "fp") return Algorithm::kFp;
  if (text == "afp") return Algorithm::kAfp;
  if (text == "naive-afp") return Algorithm::kNaiveAfp;
  throw std::invalid_argument("unknown algorithm '" + text +
                              "' (expected fp|afp|naive-afp)");
}

PlayMode ParseMode(const std::string& text) {
  if (text == "symmetric") return PlayMode::kSymmetric;
  if (text == "two-player") return PlayMode::kTwoPlayer;
  throw std::invalid_argument("unknown mode '" + text +
                              "' (expected symmetric|two-player)");
}

// Tiebreak grammar: first | last | random | fixed:I,J,... (1-based order).
TiebreakRule ParseTiebreak(const std::string& text, uint64_t seed) {
  if (text == "first") return TiebreakRule::First();
  if (text == "last") return TiebreakRule::Last();
  if (text == "random") return TiebreakRule::Random(seed);
  if (text.rfind("fixed:", 0) == 0) {
    std::vector<int> order;
    std::string item;
    std::stringstream stream(text.substr(6));
    while (std::getline(stream, item, ',')) {
      order.push_back(std::stoi(item) - 1);
    }
    return TiebreakRule::Fixed(std::move(order));
  }
  throw std::invalid_argument("unknown tiebreak '" + text +
                              "' (expected first|last|random|fixed:1,2,...)");
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream stream(text);
  while (std::getline(stream, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<int> EvenBudgetGrid(long long max_br) {
  if (max_br < 2 || max_br % 2 != 0) {
    throw std::invalid_argument("best-response budget must be even and >= 2");
  }
  std::vector<int> grid;
  for (long long r = 2; r <= max_br; r += 2) grid.push_back(static_cast<int>(r));
  return grid;
}

void RequireFlag(const std::string& value, const std::string& name) {
  if (value.empty()) {
    throw std::invalid_argument("missing required flag --" + name);
  }
}

struct RunArgs {
  std::string game, alg = "fp", mode = "symmetric", tiebreak = "first";
  long long steps = 0, brs = 0;
  uint64_t seed = 0;
  int init_row = 1, init_col = 1, fp_init = -1;
  std::string out, config;
};

int DoRun(const CLI::App& cmd, RunArgs args) {
  ConfigMerger merger(cmd, args.config);
  merger.Merge("game", &args.game);
  merger.Merge("alg", &args.alg);
  merger.Merge("mode", &args.mode);
  merger.Merge("tiebreak", &args.tiebreak);
  merger.Merge("steps", &args.steps);
  merger.Merge("brs", &args.brs);
  merger.Merge("seed", &args.seed);
  merger.Merge("init-row", &args.init_row);
  merger.Merge("init-col", &args.init_col);
  merger.Merge("fp-init", &args.fp_init);
  merger.Merge("out", &args.out);
  merger.Finish();
  RequireFlag(args.game, "game");
  RequireFlag(args.out, "out");
  if ((args.steps > 0) == (args.brs > 0)) {
    throw std::invalid_argument("exactly one of --steps and --brs is required");
  }
  const MatrixGame game = BuildGame(fictplay::GameSpec::Parse(args.game));
  const Algorithm alg = ParseAlgorithm(args.alg);
  const PlayMode mode = ParseMode(args.mode);
  const TiebreakRule rule = ParseTiebreak(args.tiebreak, args.seed);
  const Budget budget = args.steps > 0 ? Budget::Steps(args.steps)
                                       : Budget::BestResponses(args.brs);
  if (args.init_row < 1 || args.init_col < 1) {
    throw std::invalid_argument("--init-row/--init-col are 1-based");
  }
  RunTrace trace = [&] {
    if (args.fp_init >= 0) {
      if (alg != Algorithm::kAfp) {
        throw std::invalid_argument("--fp-init requires --alg afp");
      }
      return RunAfpWithFpInit(game, args.fp_init, mode, budget, rule,
                              args.init_row - 1, args.init_col - 1);
    }
    return Run(game, alg, mode, budget, rule, args.init_row - 1,
               args.init_col - 1);
  }();
  fictplay::AtomicWriteFile(args.out, TraceToCsv(trace));
  return 0;
}

struct ValueArgs {
  std::string game, out, config;
  uint64_t seed = 0;  // accepted for interface uniformity; unused
};

int DoValue(const CLI::App& cmd, ValueArgs args) {
  ConfigMerger merger(cmd, args.config);
  merger.Merge("game", &args.game);
  merger.Merge("out", &args.out);
  merger.Merge("seed", &args.seed);
  merger.Finish();
  RequireFlag(args.game, "game");
  const MatrixGame game = BuildGame(fictplay::GameSpec::Parse(args.game));
  const fictplay::ValueResult result = ExactValue(game);
  auto probs_line = [](const char* label, const fictplay::Strategy& s) {
    std::string line(label);
    for (int i = 0; i < s.size(); ++i) {
      line += ' ';
      line += fictplay::FormatDouble(s[i]);
    }
    return line;
  };
  std::cout << "value " << fictplay::FormatDouble(result.value) << "\n"
            << probs_line("row_nash", result.row_nash) << "\n"
            << probs_line("col_nash", result.col_nash) << "\n";
  if (!args.out.empty()) {
    ordered_json doc;
    doc["value"] = result.value;
    doc["row_nash"] = result.row_nash.probs();
    doc["col_nash"] = result.col_nash.probs();
    fictplay::AtomicWriteFile(args.out, doc.dump(2) + "\n");
  }
  return 0;
}

struct CompareArgs {
  std::string game, mode = "two-player", tiebreak = "random";
  long long brs = 200;
  uint64_t seed = 0;
  std::string out, config;
};

// Traces FP and AFP worst-case row payoffs on one game, indexed by best
// responses, in the long-form series CSV.
int DoCompare(const CLI::App& cmd, CompareArgs args) {
  ConfigMerger merger(cmd, args.config);
  merger.Merge("game", &args.game);
  merger.Merge("mode", &args.mode);
  merger.Merge("tiebreak", &args.tiebreak);
  merger.Merge("brs", &args.brs);
  merger.Merge("seed", &args.seed);
  merger.Merge("out", &args.out);
  merger.Finish();
  RequireFlag(args.game, "game");
  RequireFlag(args.out, "out");
  if (args.brs < 2 || args.brs % 2 != 0) {
    throw std::invalid_argument("--brs must be even and >= 2");
  }
  const MatrixGame game = BuildGame(fictplay::GameSpec::Parse(args.game));
  const PlayMode mode = ParseMode(args.mode);
  // Random tiebreaking gives each algorithm its own derived stream; the
  // deterministic rules are shared as-is.
  const TiebreakRule fp_rule = ParseTiebreak(
      args.tiebreak, fictplay::DeriveSeed(args.seed, 0, fictplay::kFpTiebreakTag));
  const TiebreakRule afp_rule = ParseTiebreak(
      args.tiebreak,
      fictplay::DeriveSeed(args.seed, 0, fictplay::kAfpTiebreakTag));
  const RunTrace fp = Run(game, Algorithm::kFp, mode,
                          Budget::BestResponses(args.brs), fp_rule);
  const RunTrace afp = Run(game, Algorithm::kAfp, mode,
                           Budget::BestResponses(args.brs), afp_rule);
  SeriesRecord record;
  record.x_kind = "best_responses";
  for (long long r = 1; r <= args.brs; ++r) {
    const double x = static_cast<double>(r);
    record.points.push_back(
        {x, "wc_row", "fp", fp.steps[static_cast<size_t>(r) - 1].worst_case_row});
    if (r % 2 == 0) {
      record.points.push_back(
          {x, "wc_row", "afp",
           afp.steps[static_cast<size_t>(r / 2) - 1].worst_case_row});
    }
  }
  fictplay::AtomicWriteFile(args.out, SeriesToCsv(record));
  return 0;
}

struct ExperimentArgs {
  std::string preset, sizes, ks;
  int replicates = 0;
  long long brs = 0, tmax = 0, fit_from = 0;
  uint64_t seed = 0;
  int jobs = 1;
  bool full = false;
  std::string out, config;
};

int DoExperiment(const CLI::App& cmd, ExperimentArgs args) {
  ConfigMerger merger(cmd, args.config);
  merger.Merge("preset", &args.preset);
  merger.Merge("sizes", &args.sizes);
  merger.Merge("ks", &args.ks);
  merger.Merge("replicates", &args.replicates);
  merger.Merge("brs", &args.brs);
  merger.Merge("tmax", &args.tmax);
  merger.Merge("fit-from", &args.fit_from);
  merger.Merge("seed", &args.seed);
  merger.Merge("jobs", &args.jobs);
  merger.Merge("full", &args.full);
  merger.Merge("out", &args.out);
  merger.Finish();
  RequireFlag(args.preset, "preset");
  RequireFlag(args.out, "out");
  if (args.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

  SeriesRecord record;
  ordered_json manifest;
  manifest["preset"] = args.preset;
  if (args.preset == "fig2") {
    const int reps =
        args.replicates > 0 ? args.replicates : (args.full ? 10000 : 1000);
    const long long br = args.brs > 0 ? args.brs : 100;
    if (br < 2 || br % 2 != 0) {
      throw std::invalid_argument("--brs must be even and >= 2");
    }
    record = fictplay::RpsBand(reps, static_cast<int>(br), args.seed, args.jobs);
    manifest["replicates"] = reps;
    manifest["br_budget"] = br;
  } else if (args.preset == "fig3") {
    const int reps =
        args.replicates > 0 ? args.replicates : (args.full ? 1000 : 200);
    const int size = args.sizes.empty() ? 30 : ParseIntList(args.sizes).at(0);
    const std::vector<int> budgets = EvenBudgetGrid(args.brs > 0 ? args.brs : 200);
    record = fictplay::ProportionBetter(size, size, reps, budgets, args.seed, args.jobs);
    manifest["replicates"] = reps;
    manifest["size"] = size;
    manifest["br_budgets"] = budgets;
  } else if (args.preset == "fig4") {
    const int reps =
        args.replicates > 0 ? args.replicates : (args.full ? 1000 : 100);
    const std::vector<int> sizes =
        args.sizes.empty() ? std::vector<int>{5, 15, 30, 60}
                           : ParseIntList(args.sizes);
    const long long br = args.brs > 0 ? args.brs : 100;
    if (br < 2 || br % 2 != 0) {
      throw std::invalid_argument("--brs must be even and >= 2");
    }
    record = fictplay::SizeSweep(sizes, reps, static_cast<int>(br), args.seed, args.jobs);
    manifest["replicates"] = reps;
    manifest["sizes"] = sizes;
    manifest["br_budget"] = br;
  } else if (args.preset == "rates-cyclic") {
    const int seeds = args.replicates > 0 ? args.replicates : 20;
    const std::vector<int> sizes =
        args.sizes.empty() ? std::vector<int>{5, 20} : ParseIntList(args.sizes);
    const long long tmax = args.tmax > 0 ? args.tmax : 100000;
    const long long fit_from = args.fit_from > 0 ? args.fit_from : 100;
    record = fictplay::CyclicRates(sizes, seeds, tmax, fit_from, args.seed, args.jobs);
    manifest["replicates"] = seeds;
    manifest["sizes"] = sizes;
    manifest["t_max"] = tmax;
    manifest["fit_from"] = fit_from;
  } else if (args.preset == "rates-transitive") {
    const std::vector<int> sizes =
        args.sizes.empty() ? std::vector<int>{10} : ParseIntList(args.sizes);
    const long long tmax = args.tmax > 0 ? args.tmax : 1000;
    record = fictplay::TransitiveRates(sizes, tmax, args.seed, args.jobs);
    manifest["sizes"] = sizes;
    manifest["t_max"] = tmax;
  } else if (args.preset == "fp-init-sweep") {
    const int reps =
        args.replicates > 0 ? args.replicates : (args.full ? 1000 : 200);
    const int size = args.sizes.empty() ? 30 : ParseIntList(args.sizes).at(0);
    const std::vector<int> ks =
        args.ks.empty() ? std::vector<int>{0, 2, 4} : ParseIntList(args.ks);
    const std::vector<int> budgets = EvenBudgetGrid(args.brs > 0 ? args.brs : 200);
    record = fictplay::FpInitSweep(ks, size, size, reps, budgets, args.seed, args.jobs);
    manifest["replicates"] = reps;
    manifest["size"] = size;
    manifest["fp_init_steps"] = ks;
    manifest["br_budgets"] = budgets;
  } else {
    throw std::invalid_argument(
        "unknown preset '" + args.preset +
        "' (expected fig2|fig3|fig4|rates-cyclic|rates-transitive|fp-init-sweep)");
  }
  manifest["base_seed"] = args.seed;
  manifest["full"] = args.full;
  const std::string csv_name = args.preset + ".csv";
  manifest["outputs"] = std::vector<std::string>{csv_name};

  std::filesystem::create_directories(args.out);
  fictplay::AtomicWriteFile(args.out + "/" + csv_name, SeriesToCsv(record));
  fictplay::AtomicWriteFile(args.out + "/manifest.json", manifest.dump(2) + "\n");
  return 0;
}

struct MetaArgs {
  std::string sampler = "fp";
  int n = 0;
  std::string out, config;
  uint64_t seed = 0;  // accepted for interface uniformity; unused
};

int DoMeta(const CLI::App& cmd, MetaArgs args) {
  ConfigMerger merger(cmd, args.config);
  merger.Merge("sampler", &args.sampler);
  merger.Merge("n", &args.n);
  merger.Merge("out", &args.out);
  merger.Merge("seed", &args.seed);
  merger.Finish();
  RequireFlag(args.out, "out");
  if (args.n < 1) throw std::invalid_argument("--n must be >= 1");
  fictplay::SamplerSpec spec = [&] {
    if (args.sampler == "fp") return fictplay::SamplerSpec::Fp();
    if (args.sampler == "afp") return fictplay::SamplerSpec::Afp();
    if (args.sampler.rfind("afp-fp-init:", 0) == 0) {
      return fictplay::SamplerSpec::AfpWithFpInit(
          std::stoi(args.sampler.substr(12)));
    }
    throw std::invalid_argument("unknown sampler '" + args.sampler +
                                "' (expected fp|afp|afp-fp-init:K)");
  }();
  const fictplay::MetaMatrix meta = BuildMetaMatrix(spec, args.n);
  fictplay::AtomicWriteFile(args.out, MetaToJson(meta));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fictplay: fictitious play and anticipatory fictitious play on "
      "two-player zero-sum matrix games"};
  app.require_subcommand(1);
  const std::string game_help =
      "Game spec: cyclic:N | transitive:N | rps | rps-saferock | "
      "gauss:MxN:SEED | file:PATH";

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "Run one learning trajectory and write its trace CSV");
  run_cmd->add_option("--game", run_args.game, game_help);
  run_cmd->add_option("--alg", run_args.alg, "Algorithm: fp|afp|naive-afp");
  run_cmd->add_option("--mode", run_args.mode, "Play mode: symmetric|two-player");
  run_cmd->add_option("--steps", run_args.steps, "Step budget (iterations)");
  run_cmd->add_option("--brs", run_args.brs,
                      "Best-response budget per player (alternative to --steps)");
  run_cmd->add_option("--tiebreak", run_args.tiebreak,
                      "Tiebreak: first|last|random|fixed:1,2,... (1-based)");
  run_cmd->add_option("--seed", run_args.seed, "Seed for random tiebreaking");
  run_cmd->add_option("--init-row", run_args.init_row, "Initial row play (1-based)");
  run_cmd->add_option("--init-col", run_args.init_col, "Initial column play (1-based)");
  run_cmd->add_option("--fp-init", run_args.fp_init,
                      "Run AFP after this many FP steps (requires --alg afp)");
  run_cmd->add_option("--out", run_args.out, "Output trace CSV path");
  run_cmd->add_option("--config", run_args.config, "JSON config file; flags override");

  ValueArgs value_args;
  CLI::App* value_cmd = app.add_subcommand(
      "value", "Solve a game exactly and print its value and a Nash pair");
  value_cmd->add_option("--game", value_args.game, game_help);
  value_cmd->add_option("--out", value_args.out, "Optional JSON output path");
  value_cmd->add_option("--seed", value_args.seed, "Accepted for uniformity; unused");
  value_cmd->add_option("--config", value_args.config,
                        "JSON config file; flags override");

  CompareArgs compare_args;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Run FP and AFP on one game and write a comparison series CSV");
  compare_cmd->add_option("--game", compare_args.game, game_help);
  compare_cmd->add_option("--mode", compare_args.mode,
                          "Play mode: symmetric|two-player");
  compare_cmd->add_option("--tiebreak", compare_args.tiebreak,
                          "Tiebreak: first|last|random|fixed:1,2,...");
  compare_cmd->add_option("--brs", compare_args.brs,
                          "Best-response budget (even)");
  compare_cmd->add_option("--seed", compare_args.seed,
                          "Base seed for per-algorithm tiebreak streams");
  compare_cmd->add_option("--out", compare_args.out, "Output series CSV path");
  compare_cmd->add_option("--config", compare_args.config,
                          "JSON config file; flags override");

  ExperimentArgs exp_args;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "Run a named experiment preset; writes CSV + manifest");
  exp_cmd->add_option("--preset", exp_args.preset,
                      "fig2|fig3|fig4|rates-cyclic|rates-transitive|fp-init-sweep");
  exp_cmd->add_option("--replicates", exp_args.replicates,
                      "Replicate count (0 = preset default)");
  exp_cmd->add_option("--sizes", exp_args.sizes,
                      "Comma-separated matrix sizes (preset default if empty)");
  exp_cmd->add_option("--ks", exp_args.ks,
                      "Comma-separated FP-init prefixes for fp-init-sweep");
  exp_cmd->add_option("--brs", exp_args.brs,
                      "Max best-response budget (0 = preset default)");
  exp_cmd->add_option("--tmax", exp_args.tmax,
                      "Step horizon for rate presets (0 = preset default)");
  exp_cmd->add_option("--fit-from", exp_args.fit_from,
                      "First step of the rate-fit window (0 = preset default)");
  exp_cmd->add_option("--seed", exp_args.seed, "Base seed for replicate streams");
  exp_cmd->add_option("--jobs", exp_args.jobs,
                      "Worker threads; never affects output bytes");
  exp_cmd->add_flag("--full", exp_args.full,
                    "Use full-scale replicate counts instead of desk scale");
  exp_cmd->add_option("--out", exp_args.out, "Output directory");
  exp_cmd->add_option("--config", exp_args.config,
                      "JSON config file; flags override");

  MetaArgs meta_args;
  CLI::App* meta_cmd = app.add_subcommand(
      "meta", "Write the opponent-sampling meta matrix for a population sampler");
  meta_cmd->add_option("--sampler", meta_args.sampler,
                       "Sampler: fp|afp|afp-fp-init:K");
  meta_cmd->add_option("--n", meta_args.n, "Population size");
  meta_cmd->add_option("--out", meta_args.out, "Output JSON path");
  meta_cmd->add_option("--seed", meta_args.seed, "Accepted for uniformity; unused");
  meta_cmd->add_option("--config", meta_args.config,
                       "JSON config file; flags override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) return DoRun(*run_cmd, run_args);
    if (value_cmd->parsed()) return DoValue(*value_cmd, value_args);
    if (compare_cmd->parsed()) return DoCompare(*compare_cmd, compare_args);
    if (exp_cmd->parsed()) return DoExperiment(*exp_cmd, exp_args);
    if (meta_cmd->parsed()) return DoMeta(*meta_cmd, meta_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no command\n";
  return 2;
}
