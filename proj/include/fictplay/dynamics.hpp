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

#ifndef FICTPLAY_DYNAMICS_H_
#define FICTPLAY_DYNAMICS_H_

#include <cstdint>
#include <vector>

#include "fictplay/matrix_game.hpp"
#include "fictplay/tiebreak.hpp"

namespace fictplay {

enum class Algorithm { kFp, kAfp, kNaiveAfp };

// kSymmetric runs self-play on one shared empirical average (square games
// only); kTwoPlayer keeps separate row/column histories with simultaneous
// updates from the same pre-step state.
enum class PlayMode { kSymmetric, kTwoPlayer };

struct StepRecord {
  int t = 0;                      // plays accumulated per player so far
  long long br_per_player = 0;    // t for FP; 2t for AFP and naive AFP
  int row_index = 0;              // 0-based pure strategies entering averages
  int col_index = 0;
  int anticipated_row_index = -1;  // -1 when no anticipation (FP, or t = 1)
  int anticipated_col_index = -1;
  double worst_case_row = 0.0;  // min of avg-row payoffs after this step
  double worst_case_col = 0.0;  // -(max of payoffs against avg col)
  double duality_gap = 0.0;     // max(A y_bar) - min(x_bar^T A), >= 0
};

struct RunTrace {
  Algorithm algorithm = Algorithm::kFp;
  PlayMode mode = PlayMode::kSymmetric;
  int rows = 0;
  int cols = 0;
  std::vector<StepRecord> steps;  // steps[k] describes time t = k + 1
  std::vector<double> avg_row;    // final empirical strategies (sum to 1)
  std::vector<double> avg_col;
};

// Incremental play state: O(m + n) per step via the accumulators
// V(t) = t * A * avg_col = A * col_counts and U(t) = t * avg_row^T * A =
// row_counts^T * A. Symmetric mode shares one count vector between the
// players (row_counts == col_counts at all times).
class DynamicsState {
 public:
  // Starts at t = 1 with pure plays e_init_row / e_init_col (symmetric mode
  // ignores init_col and requires a square game).
  DynamicsState(const MatrixGame& game, Algorithm algorithm, PlayMode mode,
                int init_row, int init_col);

  // Advances one step of the configured algorithm. All best responses within
  // the step share `rule`; random draws come from `rng` in the frozen order
  // anticipated-row, anticipated-col, final-row, final-col (and only on ties
  // of size >= 2).
  StepRecord Step(const TiebreakRule& rule, SplitMix64* rng);

  // Switches a running FP state over to AFP on the same accumulators; used by
  // the AFP-with-FP-initialization variant.
  void SetAlgorithm(Algorithm algorithm) { algorithm_ = algorithm; }

  const MatrixGame& game() const { return game_; }
  Algorithm algorithm() const { return algorithm_; }
  PlayMode mode() const { return mode_; }
  int t() const { return t_; }
  const std::vector<long long>& row_counts() const { return row_counts_; }
  const std::vector<long long>& col_counts() const { return col_counts_; }
  const std::vector<double>& V() const { return v_; }
  const std::vector<double>& U() const { return u_; }

  StepRecord MakeRecord(int row_index, int col_index, int ant_row,
                        int ant_col) const;

 private:
  void ApplyPlays(int row_index, int col_index);

  MatrixGame game_;
  Algorithm algorithm_;
  PlayMode mode_;
  int t_;
  std::vector<long long> row_counts_;
  std::vector<long long> col_counts_;
  std::vector<double> v_;  // length m
  std::vector<double> u_;  // length n
};

// Step budget: either raw steps T, or best responses R per player, which maps
// to T = R for FP and T = R/2 for AFP and naive AFP (R must be even there).
struct Budget {
  enum class Kind { kSteps, kBestResponses };
  Kind kind = Kind::kSteps;
  long long amount = 0;

  static Budget Steps(long long t);
  static Budget BestResponses(long long r);
};

// Runs `algorithm` from pure initial plays and records one StepRecord per
// time t = 1..T (the t = 1 record is the initial state). Deterministic:
// kRandomUniform draws come from one SplitMix64(rule.seed) stream per run.
RunTrace Run(const MatrixGame& game, Algorithm algorithm, PlayMode mode,
             Budget budget, const TiebreakRule& rule, int init_row = 0,
             int init_col = 0);

// AFP initialized with fp_init_steps of FP: steps t = 2..fp_init_steps+1 are
// FP updates, later steps are AFP updates on the same accumulators.
// br_per_player grows by 1 on FP steps and 2 on AFP steps.
RunTrace RunAfpWithFpInit(const MatrixGame& game, int fp_init_steps,
                          PlayMode mode, Budget budget,
                          const TiebreakRule& rule, int init_row = 0,
                          int init_col = 0);

// Largest t whose cumulative best-response count fits within r, given the
// trace's br_per_player column; 0 if even t = 1 exceeds the budget.
int StepIndexForBudget(const RunTrace& trace, long long r);

// True iff duality_gap(t) <= 16a * t^(-1/(m+n-2)) at every recorded step
// (trivially true for 1x1 games, where the gap is identically zero). If
// flagged_count is non-null it receives the number of steps whose gap lies
// between the 8a and 16a envelopes.
bool Theorem1BoundCheck(const RunTrace& trace, const MatrixGame& game,
                        int* flagged_count = nullptr);

struct DeltaStats {
  std::vector<long long> max_delta;       // max Delta_t for t = 1..T
  std::vector<int> change_times;          // tau_k: k-th time the play changes
  std::vector<long long> first_time_max;  // t_m: first t with max Delta = m,
                                          // for m = 1..max reached
};

// Replays a symmetric cyclic-game trace through the integer update
// Delta_{t+1} = Delta_t + column(i_t) and reports the running maximum, the
// play-change times, and the first-passage times of each maximum level.
// Throws unless the trace is symmetric and the game is square.
DeltaStats ComputeDeltaStats(const RunTrace& trace, const MatrixGame& game);

}  // namespace fictplay

#endif  // FICTPLAY_DYNAMICS_H_
