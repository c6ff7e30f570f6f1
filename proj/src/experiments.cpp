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

#include "fictplay/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fictplay/dynamics.hpp"
#include "fictplay/generators.hpp"
#include "fictplay/matrix_game.hpp"
#include "fictplay/rng.hpp"
#include "fictplay/tiebreak.hpp"

namespace fictplay {
namespace {

constexpr double kZ95 = 1.96;

// Runs fn(0..total-1) on up to `jobs` threads. Work items only write their
// own slot, so the result is identical for any job count.
void ParallelFor(int total, int jobs, const std::function<void(int)>& fn) {
  if (total <= 0) return;
  const int workers = std::max(1, std::min(jobs, total));
  if (workers == 1) {
    for (int i = 0; i < total; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= total) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Linear-interpolation percentile on a sorted copy: rank q*(n-1).
double Percentile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("Percentile: empty input");
  std::sort(values.begin(), values.end());
  const double rank = q * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(rank);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = rank - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::pair<double, double> AgrestiCoullReal(double successes, double trials,
                                           double z) {
  const double n_adj = trials + z * z;
  const double p_adj = (successes + z * z / 2.0) / n_adj;
  const double half = z * std::sqrt(p_adj * (1.0 - p_adj) / n_adj);
  return {std::max(0.0, p_adj - half), std::min(1.0, p_adj + half)};
}

// Worst-case row payoff of the largest step whose best-response count fits
// within budget r.
double WcRowAtBudget(const RunTrace& trace, int r) {
  const int t = StepIndexForBudget(trace, r);
  if (t < 1) throw std::logic_error("WcRowAtBudget: budget precedes first step");
  return trace.steps[static_cast<size_t>(t) - 1].worst_case_row;
}

// Success weight for "challenger at least as good as incumbent". With
// split_ties a tie contributes half a success instead of a full one.
double SuccessWeight(double challenger, double incumbent, bool split_ties) {
  if (challenger > incumbent) return 1.0;
  if (challenger == incumbent) return split_ties ? 0.5 : 1.0;
  return 0.0;
}

// Seed family for one size of a sweep, keyed by the size value itself so
// extending the size list never perturbs existing families.
uint64_t SizeFamilySeed(uint64_t base_seed, int size) {
  return DeriveSeed(base_seed, static_cast<uint64_t>(size), kGameGenTag);
}

void AppendProportion(SeriesRecord* record, double x,
                      const std::string& algorithm, double successes,
                      double trials) {
  const auto [lo, hi] = AgrestiCoullReal(successes, trials, kZ95);
  record->points.push_back({x, "proportion", algorithm, successes / trials});
  record->points.push_back({x, "ci_lo", algorithm, lo});
  record->points.push_back({x, "ci_hi", algorithm, hi});
}

}  // namespace

std::pair<double, double> AgrestiCoull(long long successes, long long trials,
                                       double z) {
  if (trials < 1) throw std::invalid_argument("AgrestiCoull: trials must be >= 1");
  if (successes < 0 || successes > trials) {
    throw std::invalid_argument("AgrestiCoull: successes outside [0, trials]");
  }
  return AgrestiCoullReal(static_cast<double>(successes),
                          static_cast<double>(trials), z);
}

double RateFit(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 10) {
    throw std::invalid_argument("RateFit: need at least 10 points");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, v] : series) {
    if (x <= 0.0 || v <= 0.0) {
      throw std::invalid_argument("RateFit: x and value must be positive");
    }
    mean_x += std::log(x);
    mean_y += std::log(v);
  }
  mean_x /= static_cast<double>(series.size());
  mean_y /= static_cast<double>(series.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, v] : series) {
    const double dx = std::log(x) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("RateFit: degenerate x range");
  return sxy / sxx;
}

SeriesRecord RpsBand(int replicates, int br_budget, uint64_t base_seed,
                     int jobs) {
  if (replicates < 1) throw std::invalid_argument("RpsBand: replicates < 1");
  if (br_budget < 2 || br_budget % 2 != 0) {
    throw std::invalid_argument("RpsBand: br budget must be even and >= 2");
  }
  const MatrixGame game = RpsGame();
  const double value = ExactValue(game).value;
  struct Slot {
    std::vector<double> fp_wc;
    std::vector<double> afp_wc;
  };
  std::vector<Slot> slots(static_cast<size_t>(replicates));
  ParallelFor(replicates, jobs, [&](int r) {
    const auto rep = static_cast<uint64_t>(r);
    const RunTrace fp =
        Run(game, Algorithm::kFp, PlayMode::kSymmetric,
            Budget::BestResponses(br_budget),
            TiebreakRule::Random(DeriveSeed(base_seed, rep, kFpTiebreakTag)));
    const RunTrace afp =
        Run(game, Algorithm::kAfp, PlayMode::kSymmetric,
            Budget::BestResponses(br_budget),
            TiebreakRule::Random(DeriveSeed(base_seed, rep, kAfpTiebreakTag)));
    Slot& slot = slots[static_cast<size_t>(r)];
    slot.fp_wc.reserve(fp.steps.size());
    for (const StepRecord& s : fp.steps) slot.fp_wc.push_back(s.worst_case_row);
    slot.afp_wc.reserve(afp.steps.size());
    for (const StepRecord& s : afp.steps) slot.afp_wc.push_back(s.worst_case_row);
  });
  SeriesRecord record;
  record.x_kind = "best_responses";
  std::vector<double> sample(static_cast<size_t>(replicates));
  for (int r = 1; r <= br_budget; ++r) {
    const double x = static_cast<double>(r);
    for (size_t i = 0; i < slots.size(); ++i) sample[i] = slots[i].fp_wc[r - 1];
    record.points.push_back({x, "p10", "fp", Percentile(sample, 0.10)});
    record.points.push_back({x, "median", "fp", Percentile(sample, 0.50)});
    record.points.push_back({x, "p90", "fp", Percentile(sample, 0.90)});
    if (r % 2 == 0) {
      for (size_t i = 0; i < slots.size(); ++i) {
        sample[i] = slots[i].afp_wc[r / 2 - 1];
      }
      record.points.push_back({x, "p10", "afp", Percentile(sample, 0.10)});
      record.points.push_back({x, "median", "afp", Percentile(sample, 0.50)});
      record.points.push_back({x, "p90", "afp", Percentile(sample, 0.90)});
    }
    record.points.push_back({x, "value", "exact", value});
  }
  return record;
}

SeriesRecord ProportionBetter(int rows, int cols, int num_matrices,
                              const std::vector<int>& br_budgets,
                              uint64_t base_seed, int jobs, bool split_ties) {
  if (num_matrices < 1) {
    throw std::invalid_argument("ProportionBetter: num_matrices < 1");
  }
  if (br_budgets.empty()) {
    throw std::invalid_argument("ProportionBetter: no br budgets");
  }
  for (int r : br_budgets) {
    if (r < 2 || r % 2 != 0) {
      throw std::invalid_argument("ProportionBetter: br budgets must be even and >= 2");
    }
  }
  const int max_br = *std::max_element(br_budgets.begin(), br_budgets.end());
  std::vector<std::vector<double>> weights(
      static_cast<size_t>(num_matrices),
      std::vector<double>(br_budgets.size()));
  ParallelFor(num_matrices, jobs, [&](int i) {
    const auto rep = static_cast<uint64_t>(i);
    const MatrixGame game = RandomGaussianGame(
        rows, cols, DeriveSeed(base_seed, rep, kGameGenTag));
    const RunTrace fp =
        Run(game, Algorithm::kFp, PlayMode::kTwoPlayer,
            Budget::BestResponses(max_br),
            TiebreakRule::Random(DeriveSeed(base_seed, rep, kFpTiebreakTag)));
    const RunTrace afp =
        Run(game, Algorithm::kAfp, PlayMode::kTwoPlayer,
            Budget::BestResponses(max_br),
            TiebreakRule::Random(DeriveSeed(base_seed, rep, kAfpTiebreakTag)));
    for (size_t b = 0; b < br_budgets.size(); ++b) {
      weights[static_cast<size_t>(i)][b] =
          SuccessWeight(WcRowAtBudget(afp, br_budgets[b]),
                        WcRowAtBudget(fp, br_budgets[b]), split_ties);
    }
  });
  SeriesRecord record;
  record.x_kind = "best_responses";
  for (size_t b = 0; b < br_budgets.size(); ++b) {
    double successes = 0.0;
    for (const auto& w : weights) successes += w[b];
    AppendProportion(&record, static_cast<double>(br_budgets[b]), "afp_vs_fp",
                     successes, static_cast<double>(num_matrices));
  }
  return record;
}

SeriesRecord SizeSweep(const std::vector<int>& sizes, int num_matrices,
                       int br_budget, uint64_t base_seed, int jobs) {
  if (sizes.empty()) throw std::invalid_argument("SizeSweep: no sizes");
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("SizeSweep: sizes must be >= 1");
  }
  if (num_matrices < 1) throw std::invalid_argument("SizeSweep: num_matrices < 1");
  if (br_budget < 2 || br_budget % 2 != 0) {
    throw std::invalid_argument("SizeSweep: br budget must be even and >= 2");
  }
  SeriesRecord record;
  record.x_kind = "matrix_size";
  for (int size : sizes) {
    const uint64_t family = SizeFamilySeed(base_seed, size);
    std::vector<double> fp_wc(static_cast<size_t>(num_matrices));
    std::vector<double> afp_wc(static_cast<size_t>(num_matrices));
    ParallelFor(num_matrices, jobs, [&](int i) {
      const auto rep = static_cast<uint64_t>(i);
      const MatrixGame game =
          RandomGaussianGame(size, size, DeriveSeed(family, rep, kGameGenTag));
      const RunTrace fp =
          Run(game, Algorithm::kFp, PlayMode::kTwoPlayer,
              Budget::BestResponses(br_budget),
              TiebreakRule::Random(DeriveSeed(family, rep, kFpTiebreakTag)));
      const RunTrace afp =
          Run(game, Algorithm::kAfp, PlayMode::kTwoPlayer,
              Budget::BestResponses(br_budget),
              TiebreakRule::Random(DeriveSeed(family, rep, kAfpTiebreakTag)));
      fp_wc[static_cast<size_t>(i)] = WcRowAtBudget(fp, br_budget);
      afp_wc[static_cast<size_t>(i)] = WcRowAtBudget(afp, br_budget);
    });
    const double x = static_cast<double>(size);
    record.points.push_back({x, "mean", "fp", Mean(fp_wc)});
    record.points.push_back({x, "p10", "fp", Percentile(fp_wc, 0.10)});
    record.points.push_back({x, "p90", "fp", Percentile(fp_wc, 0.90)});
    record.points.push_back({x, "mean", "afp", Mean(afp_wc)});
    record.points.push_back({x, "p10", "afp", Percentile(afp_wc, 0.10)});
    record.points.push_back({x, "p90", "afp", Percentile(afp_wc, 0.90)});
  }
  return record;
}

SeriesRecord CyclicRates(const std::vector<int>& sizes, int num_seeds,
                         long long t_max, long long fit_from,
                         uint64_t base_seed, int jobs) {
  if (sizes.empty()) throw std::invalid_argument("CyclicRates: no sizes");
  if (num_seeds < 1) throw std::invalid_argument("CyclicRates: num_seeds < 1");
  if (fit_from < 1 || fit_from + 9 > t_max) {
    throw std::invalid_argument("CyclicRates: fit window needs >= 10 steps");
  }
  SeriesRecord record;
  record.x_kind = "matrix_size";
  for (int size : sizes) {
    const MatrixGame game = CyclicGame(size);
    const uint64_t family = SizeFamilySeed(base_seed, size);
    std::vector<double> slopes(static_cast<size_t>(num_seeds));
    ParallelFor(num_seeds, jobs, [&](int i) {
      const RunTrace trace = Run(
          game, Algorithm::kFp, PlayMode::kSymmetric, Budget::Steps(t_max),
          TiebreakRule::Random(
              DeriveSeed(family, static_cast<uint64_t>(i), kFpTiebreakTag)));
      const DeltaStats stats = ComputeDeltaStats(trace, game);
      std::vector<std::pair<double, double>> series;
      series.reserve(static_cast<size_t>(t_max - fit_from + 1));
      for (long long t = fit_from; t <= t_max; ++t) {
        const long long max_delta = stats.max_delta[static_cast<size_t>(t) - 1];
        if (max_delta > 0) {
          series.emplace_back(static_cast<double>(t),
                              static_cast<double>(max_delta));
        }
      }
      slopes[static_cast<size_t>(i)] = RateFit(series);
    });
    const double x = static_cast<double>(size);
    record.points.push_back({x, "mean", "fp", Mean(slopes)});
    record.points.push_back({x, "p10", "fp", Percentile(slopes, 0.10)});
    record.points.push_back({x, "p90", "fp", Percentile(slopes, 0.90)});
  }
  return record;
}

SeriesRecord TransitiveRates(const std::vector<int>& sizes, long long t_max,
                             uint64_t /*base_seed*/, int jobs) {
  if (sizes.empty()) throw std::invalid_argument("TransitiveRates: no sizes");
  SeriesRecord record;
  record.x_kind = "matrix_size";
  std::vector<double> slopes(sizes.size());
  ParallelFor(static_cast<int>(sizes.size()), jobs, [&](int idx) {
    const int size = sizes[static_cast<size_t>(idx)];
    if (size < 2 || size + 9 > t_max) {
      throw std::invalid_argument("TransitiveRates: fit window needs >= 10 steps");
    }
    const MatrixGame game = TransitiveGame(size);
    // The run is deterministic under first-index tiebreaking, so no seed
    // stream is consumed.
    const RunTrace trace = Run(game, Algorithm::kAfp, PlayMode::kSymmetric,
                               Budget::Steps(t_max), TiebreakRule::First());
    std::vector<std::pair<double, double>> series;
    for (long long t = size; t <= t_max; ++t) {
      const double gap = trace.steps[static_cast<size_t>(t) - 1].duality_gap;
      if (gap > 0.0) {
        series.emplace_back(static_cast<double>(t), gap);
      }
    }
    slopes[static_cast<size_t>(idx)] = RateFit(series);
  });
  for (size_t i = 0; i < sizes.size(); ++i) {
    record.points.push_back(
        {static_cast<double>(sizes[i]), "mean", "afp", slopes[i]});
  }
  return record;
}

SeriesRecord FpInitSweep(const std::vector<int>& fp_init_steps, int rows,
                         int cols, int num_matrices,
                         const std::vector<int>& br_budgets,
                         uint64_t base_seed, int jobs) {
  if (fp_init_steps.empty()) {
    throw std::invalid_argument("FpInitSweep: no fp_init_steps");
  }
  for (int k : fp_init_steps) {
    if (k < 0) throw std::invalid_argument("FpInitSweep: negative fp_init_steps");
  }
  if (num_matrices < 1) throw std::invalid_argument("FpInitSweep: num_matrices < 1");
  if (br_budgets.empty()) throw std::invalid_argument("FpInitSweep: no br budgets");
  for (int r : br_budgets) {
    if (r < 2 || r % 2 != 0) {
      throw std::invalid_argument("FpInitSweep: br budgets must be even and >= 2");
    }
  }
  const int max_br = *std::max_element(br_budgets.begin(), br_budgets.end());
  const size_t num_k = fp_init_steps.size();
  // weights[i][k * budgets + b]; the FP-vs-FP baseline compares the run to
  // itself with ties split evenly, a flat exact-0.5 reference line.
  std::vector<std::vector<double>> weights(
      static_cast<size_t>(num_matrices),
      std::vector<double>(num_k * br_budgets.size()));
  ParallelFor(num_matrices, jobs, [&](int i) {
    const auto rep = static_cast<uint64_t>(i);
    const MatrixGame game = RandomGaussianGame(
        rows, cols, DeriveSeed(base_seed, rep, kGameGenTag));
    const RunTrace fp =
        Run(game, Algorithm::kFp, PlayMode::kTwoPlayer,
            Budget::BestResponses(max_br),
            TiebreakRule::Random(DeriveSeed(base_seed, rep, kFpTiebreakTag)));
    for (size_t ki = 0; ki < num_k; ++ki) {
      const int k = fp_init_steps[ki];
      const RunTrace hybrid = RunAfpWithFpInit(
          game, k, PlayMode::kTwoPlayer, Budget::BestResponses(max_br),
          TiebreakRule::Random(DeriveSeed(
              base_seed, rep, kHybridTiebreakTagBase + static_cast<uint64_t>(k))));
      for (size_t b = 0; b < br_budgets.size(); ++b) {
        weights[static_cast<size_t>(i)][ki * br_budgets.size() + b] =
            SuccessWeight(WcRowAtBudget(hybrid, br_budgets[b]),
                          WcRowAtBudget(fp, br_budgets[b]),
                          /*split_ties=*/false);
      }
    }
  });
  SeriesRecord record;
  record.x_kind = "best_responses";
  for (size_t b = 0; b < br_budgets.size(); ++b) {
    const double x = static_cast<double>(br_budgets[b]);
    for (size_t ki = 0; ki < num_k; ++ki) {
      double successes = 0.0;
      for (const auto& w : weights) successes += w[ki * br_budgets.size() + b];
      AppendProportion(&record, x,
                       "afp_fp_init:" + std::to_string(fp_init_steps[ki]) +
                           "_vs_fp",
                       successes, static_cast<double>(num_matrices));
    }
    AppendProportion(&record, x, "fp_vs_fp",
                     0.5 * static_cast<double>(num_matrices),
                     static_cast<double>(num_matrices));
  }
  return record;
}

}  // namespace fictplay
