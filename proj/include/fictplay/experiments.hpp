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

#ifndef FICTPLAY_EXPERIMENTS_H_
#define FICTPLAY_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fictplay {

// Adjusted-count binomial confidence interval, clamped to [0, 1]:
// n~ = trials + z^2, p~ = (successes + z^2/2)/n~, p~ +- z*sqrt(p~(1-p~)/n~).
// Throws on trials < 1 or successes outside [0, trials].
std::pair<double, double> AgrestiCoull(long long successes, long long trials,
                                       double z);

// Ordinary-least-squares slope of log(value) against log(x). Requires at
// least 10 points with positive x and value; throws otherwise. Slope -1
// means value ~ 1/x.
double RateFit(const std::vector<std::pair<double, double>>& series);

// Long-form aggregate output, one row per (x, statistic, algorithm) triple;
// maps 1:1 onto the experiment CSV format.
struct SeriesPoint {
  double x = 0.0;
  std::string stat;       // "mean", "median", "p10", "p90", "proportion", ...
  std::string algorithm;  // "fp", "afp", "afp_fp_init:K", comparison labels
  double value = 0.0;
};

struct SeriesRecord {
  std::string x_kind;  // "best_responses", "matrix_size", "steps", "size"
  std::vector<SeriesPoint> points;
};

// Experiment harness. All entry points are deterministic functions of their
// arguments: replicate r derives its streams via DeriveSeed(base_seed, r,
// tag), replicates are merged in index order, and `jobs` only controls how
// many threads execute them.

// Percentile bands (p10/median/p90) of the worst-case row payoff for FP and
// AFP in symmetric self-play on Rock Paper Scissors with random tiebreaking,
// per best-response count up to br_budget.
SeriesRecord RpsBand(int replicates, int br_budget, uint64_t base_seed,
                     int jobs);

// Proportion of replicates (random m x n Gaussian games) where AFP's
// worst-case row payoff at r best responses is >= FP's, for each even r in
// br_budgets, with the Agresti-Coull 95% interval. Ties count for AFP; with
// split_ties they count half (used for the FP-against-itself baseline, whose
// curve is then exactly 0.5).
SeriesRecord ProportionBetter(int rows, int cols, int num_matrices,
                              const std::vector<int>& br_budgets,
                              uint64_t base_seed, int jobs,
                              bool split_ties = false);

// Mean/p10/p90 of the worst-case row payoff at a fixed best-response budget
// (FP at step R, AFP at step R/2) across random square Gaussian games, per
// matrix size.
SeriesRecord SizeSweep(const std::vector<int>& sizes, int num_matrices,
                       int br_budget, uint64_t base_seed, int jobs);

// Log-log growth rate of the maximum accumulated payoff under FP with random
// tiebreaking on cyclic games, fitted over t in [fit_from, t_max] per seed;
// emits per-seed slopes and their mean per game size. Slope 0.5 corresponds
// to sqrt(t) growth.
SeriesRecord CyclicRates(const std::vector<int>& sizes, int num_seeds,
                         long long t_max, long long fit_from,
                         uint64_t base_seed, int jobs);

// Log-log decay rate of the duality gap under AFP in symmetric self-play on
// transitive games, fitted over t in [n, t_max]. Slope -1 corresponds to a
// 1/t rate.
SeriesRecord TransitiveRates(const std::vector<int>& sizes, long long t_max,
                             uint64_t base_seed, int jobs);

// ProportionBetter-style comparison of AFP initialized with k FP steps
// against plain FP, for each k in fp_init_steps, plus an FP-against-itself
// baseline with ties split evenly (a flat 0.5 line).
SeriesRecord FpInitSweep(const std::vector<int>& fp_init_steps, int rows,
                         int cols, int num_matrices,
                         const std::vector<int>& br_budgets,
                         uint64_t base_seed, int jobs);

}  // namespace fictplay

#endif  // FICTPLAY_EXPERIMENTS_H_
