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

#include "fictplay/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fictplay {
namespace {

std::vector<int> ArgmaxSet(const std::vector<double>& values) {
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<int> set;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] == best) set.push_back(k);
  }
  return set;
}

std::vector<int> ArgminSet(const std::vector<double>& values) {
  const double best = *std::min_element(values.begin(), values.end());
  std::vector<int> set;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] == best) set.push_back(k);
  }
  return set;
}

// values + column j of A, without forming strategies.
std::vector<double> PlusColumn(const MatrixGame& game,
                               const std::vector<double>& values, int j) {
  std::vector<double> out = values;
  for (int i = 0; i < game.rows(); ++i) out[i] += game.At(i, j);
  return out;
}

std::vector<double> PlusRow(const MatrixGame& game,
                            const std::vector<double>& values, int i) {
  std::vector<double> out = values;
  for (int j = 0; j < game.cols(); ++j) out[j] += game.At(i, j);
  return out;
}

}  // namespace

DynamicsState::DynamicsState(const MatrixGame& game, Algorithm algorithm,
                             PlayMode mode, int init_row, int init_col)
    : game_(game), algorithm_(algorithm), mode_(mode), t_(0) {
  if (mode_ == PlayMode::kSymmetric && game_.rows() != game_.cols()) {
    throw std::invalid_argument("DynamicsState: symmetric mode needs a square game");
  }
  if (init_row < 0 || init_row >= game_.rows()) {
    throw std::invalid_argument("DynamicsState: init_row out of range");
  }
  if (mode_ == PlayMode::kSymmetric) {
    init_col = init_row;
  } else if (init_col < 0 || init_col >= game_.cols()) {
    throw std::invalid_argument("DynamicsState: init_col out of range");
  }
  row_counts_.assign(game_.rows(), 0);
  col_counts_.assign(game_.cols(), 0);
  v_.assign(game_.rows(), 0.0);
  u_.assign(game_.cols(), 0.0);
  ApplyPlays(init_row, init_col);
}

void DynamicsState::ApplyPlays(int row_index, int col_index) {
  ++row_counts_[row_index];
  ++col_counts_[col_index];
  v_ = PlusColumn(game_, v_, col_index);
  u_ = PlusRow(game_, u_, row_index);
  ++t_;
}

StepRecord DynamicsState::MakeRecord(int row_index, int col_index, int ant_row,
                                     int ant_col) const {
  StepRecord rec;
  rec.t = t_;
  rec.br_per_player =
      algorithm_ == Algorithm::kFp ? t_ : 2LL * t_;
  rec.row_index = row_index;
  rec.col_index = col_index;
  rec.anticipated_row_index = ant_row;
  rec.anticipated_col_index = ant_col;
  const double td = static_cast<double>(t_);
  // + 0.0 normalizes -0.0 so equal-magnitude stats serialize identically.
  rec.worst_case_row = *std::min_element(u_.begin(), u_.end()) / td + 0.0;
  rec.worst_case_col = -*std::max_element(v_.begin(), v_.end()) / td + 0.0;
  rec.duality_gap = *std::max_element(v_.begin(), v_.end()) / td -
                    *std::min_element(u_.begin(), u_.end()) / td;
  return rec;
}

StepRecord DynamicsState::Step(const TiebreakRule& rule, SplitMix64* rng) {
  int row_index = 0;
  int col_index = 0;
  int ant_row = -1;
  int ant_col = -1;

  switch (algorithm_) {
    case Algorithm::kFp: {
      row_index = SelectIndex(rule, ArgmaxSet(v_), rng);
      col_index = mode_ == PlayMode::kSymmetric
                      ? row_index
                      : SelectIndex(rule, ArgminSet(u_), rng);
      break;
    }
    case Algorithm::kAfp: {
      // Anticipate the responses to the current averages, then best-respond
      // to averages extended by those responses. Only the final plays enter
      // the counts.
      ant_row = SelectIndex(rule, ArgmaxSet(v_), rng);
      if (mode_ == PlayMode::kSymmetric) {
        ant_col = ant_row;
        row_index = SelectIndex(rule, ArgmaxSet(PlusColumn(game_, v_, ant_row)), rng);
        col_index = row_index;
      } else {
        ant_col = SelectIndex(rule, ArgminSet(u_), rng);
        row_index = SelectIndex(rule, ArgmaxSet(PlusColumn(game_, v_, ant_col)), rng);
        col_index = SelectIndex(rule, ArgminSet(PlusRow(game_, u_, ant_row)), rng);
      }
      break;
    }
    case Algorithm::kNaiveAfp: {
      // Best-respond to the opponent's pure anticipated best response instead
      // of folding it into the average.
      if (mode_ == PlayMode::kSymmetric) {
        ant_row = SelectIndex(rule, ArgmaxSet(v_), rng);
        ant_col = ant_row;
        std::vector<double> column(game_.rows());
        for (int i = 0; i < game_.rows(); ++i) column[i] = game_.At(i, ant_row);
        row_index = SelectIndex(rule, ArgmaxSet(column), rng);
        col_index = row_index;
      } else {
        ant_row = SelectIndex(rule, ArgmaxSet(v_), rng);
        ant_col = SelectIndex(rule, ArgminSet(u_), rng);
        std::vector<double> column(game_.rows());
        for (int i = 0; i < game_.rows(); ++i) column[i] = game_.At(i, ant_col);
        row_index = SelectIndex(rule, ArgmaxSet(column), rng);
        std::vector<double> row(game_.cols());
        for (int j = 0; j < game_.cols(); ++j) row[j] = game_.At(ant_row, j);
        col_index = SelectIndex(rule, ArgminSet(row), rng);
      }
      break;
    }
  }

  ApplyPlays(row_index, col_index);
  return MakeRecord(row_index, col_index, ant_row, ant_col);
}

Budget Budget::Steps(long long t) {
  if (t < 1) throw std::invalid_argument("Budget: steps must be >= 1");
  return {Kind::kSteps, t};
}

Budget Budget::BestResponses(long long r) {
  if (r < 1) throw std::invalid_argument("Budget: best responses must be >= 1");
  return {Kind::kBestResponses, r};
}

namespace {

long long ResolveSteps(Algorithm algorithm, Budget budget) {
  if (budget.kind == Budget::Kind::kSteps) return budget.amount;
  if (algorithm == Algorithm::kFp) return budget.amount;
  if (budget.amount % 2 != 0) {
    throw std::invalid_argument(
        "Budget: best-response budget must be even for AFP variants");
  }
  return budget.amount / 2;
}

std::vector<double> Normalize(const std::vector<long long>& counts,
                              long long total) {
  std::vector<double> out(counts.size());
  for (size_t k = 0; k < counts.size(); ++k) {
    out[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  }
  return out;
}

RunTrace RunSteps(DynamicsState state, long long total_steps,
                  const TiebreakRule& rule, long long switch_after_t = -1) {
  SplitMix64 rng(rule.seed);
  RunTrace trace;
  trace.algorithm = switch_after_t >= 0 ? Algorithm::kAfp : state.algorithm();
  trace.mode = state.mode();
  trace.rows = state.game().rows();
  trace.cols = state.game().cols();
  trace.steps.reserve(static_cast<size_t>(total_steps));

  int init_row = 0;
  int init_col = 0;
  for (int i = 0; i < state.game().rows(); ++i) {
    if (state.row_counts()[i] == 1) init_row = i;
  }
  for (int j = 0; j < state.game().cols(); ++j) {
    if (state.col_counts()[j] == 1) init_col = j;
  }
  StepRecord first = state.MakeRecord(init_row, init_col, -1, -1);
  long long br = state.algorithm() == Algorithm::kFp ? 1 : 2;
  first.br_per_player = br;
  trace.steps.push_back(first);

  for (long long t = 2; t <= total_steps; ++t) {
    if (switch_after_t >= 0 && t == switch_after_t + 1) {
      state.SetAlgorithm(Algorithm::kAfp);
    }
    StepRecord rec = state.Step(rule, &rng);
    br += state.algorithm() == Algorithm::kFp ? 1 : 2;
    rec.br_per_player = br;
    trace.steps.push_back(rec);
  }

  trace.avg_row = Normalize(state.row_counts(), total_steps);
  trace.avg_col = Normalize(state.col_counts(), total_steps);
  return trace;
}

}  // namespace

RunTrace Run(const MatrixGame& game, Algorithm algorithm, PlayMode mode,
             Budget budget, const TiebreakRule& rule, int init_row,
             int init_col) {
  const long long total = ResolveSteps(algorithm, budget);
  if (total < 1) throw std::invalid_argument("Run: budget maps to zero steps");
  DynamicsState state(game, algorithm, mode, init_row, init_col);
  return RunSteps(std::move(state), total, rule);
}

RunTrace RunAfpWithFpInit(const MatrixGame& game, int fp_init_steps,
                          PlayMode mode, Budget budget,
                          const TiebreakRule& rule, int init_row,
                          int init_col) {
  if (fp_init_steps < 0) {
    throw std::invalid_argument("RunAfpWithFpInit: negative FP prefix");
  }
  // The FP prefix covers times t = 1..k+1 at one best response per step;
  // afterwards each AFP step adds two.
  long long total = 0;
  if (budget.kind == Budget::Kind::kSteps) {
    total = budget.amount;
  } else {
    const long long r = budget.amount;
    const long long k = fp_init_steps;
    total = r <= k + 1 ? r : k + 1 + (r - k - 1) / 2;
  }
  if (total < 1) throw std::invalid_argument("RunAfpWithFpInit: zero steps");
  DynamicsState state(game, Algorithm::kFp, mode, init_row, init_col);
  return RunSteps(std::move(state), total, rule, fp_init_steps + 1);
}

int StepIndexForBudget(const RunTrace& trace, long long r) {
  int best = 0;
  for (const StepRecord& rec : trace.steps) {
    if (rec.br_per_player <= r) best = rec.t;
  }
  return best;
}

bool Theorem1BoundCheck(const RunTrace& trace, const MatrixGame& game,
                        int* flagged_count) {
  if (flagged_count != nullptr) *flagged_count = 0;
  const int degree = game.rows() + game.cols() - 2;
  if (degree == 0) return true;  // 1x1: the gap is identically zero
  const double a = game.MaxAbsPayoff();
  const double exponent = -1.0 / degree;
  bool ok = true;
  for (const StepRecord& rec : trace.steps) {
    const double decay = std::pow(static_cast<double>(rec.t), exponent);
    if (rec.duality_gap > 16.0 * a * decay) {
      ok = false;
    } else if (flagged_count != nullptr && rec.duality_gap > 8.0 * a * decay) {
      ++*flagged_count;
    }
  }
  return ok;
}

DeltaStats ComputeDeltaStats(const RunTrace& trace, const MatrixGame& game) {
  if (trace.mode != PlayMode::kSymmetric || game.rows() != game.cols()) {
    throw std::invalid_argument("ComputeDeltaStats: needs a symmetric run on a square game");
  }
  const int n = game.rows();
  std::vector<std::vector<long long>> columns(
      n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = game.At(i, j);
      const long long r = std::llround(v);
      if (std::abs(v - static_cast<double>(r)) > 1e-9) {
        throw std::invalid_argument("ComputeDeltaStats: game entries must be integers");
      }
      columns[j][i] = r;
    }
  }

  DeltaStats stats;
  std::vector<long long> delta(n, 0);
  int previous_play = -1;
  for (const StepRecord& rec : trace.steps) {
    const std::vector<long long>& column = columns[rec.row_index];
    for (int i = 0; i < n; ++i) delta[i] += column[i];
    const long long max_now = *std::max_element(delta.begin(), delta.end());
    stats.max_delta.push_back(max_now);
    if (previous_play >= 0 && rec.row_index != previous_play) {
      stats.change_times.push_back(rec.t);
    }
    previous_play = rec.row_index;
    while (static_cast<long long>(stats.first_time_max.size()) < max_now) {
      stats.first_time_max.push_back(rec.t);
    }
  }
  return stats;
}

}  // namespace fictplay
