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

#ifndef FICTPLAY_MATRIX_GAME_H_
#define FICTPLAY_MATRIX_GAME_H_

#include <cstdint>
#include <vector>

namespace fictplay {

enum class Player { kRow, kCol };

// Two-player zero-sum matrix game. The row player receives payoffs[i * cols
// + j] when pure strategies (i, j) are played; the row player maximizes and
// the column player minimizes. All entries must be finite.
class MatrixGame {
 public:
  // Throws std::invalid_argument on empty dimensions, size mismatch, or
  // non-finite entries.
  MatrixGame(int rows, int cols, std::vector<double> payoffs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double At(int i, int j) const { return payoffs_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<double>& payoffs() const { return payoffs_; }

  // a = max_{i,j} |A_{i,j}|.
  double MaxAbsPayoff() const { return max_abs_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> payoffs_;  // row-major
  double max_abs_;
};

// Probability vector over one player's pure strategies: entries >= 0 and
// summing to 1 within 1e-12.
class Strategy {
 public:
  // Throws std::invalid_argument if the invariants fail.
  explicit Strategy(std::vector<double> probs);

  static Strategy PointMass(int size, int index);
  static Strategy Uniform(int size);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// A y: the row player's expected payoff per pure row against y.
std::vector<double> RowPayoffVector(const MatrixGame& game, const Strategy& y);

// x^T A: the payoff per pure column against x (still the row player's payoff,
// which the column player wants small).
std::vector<double> ColPayoffVector(const MatrixGame& game, const Strategy& x);

// Indices attaining the best payoff for `player` against `opponent`, compared
// exactly (no tolerance): argmax of A y for kRow, argmin of x^T A for kCol.
// Sorted ascending; never empty. Throws on dimension mismatch.
std::vector<int> BestResponseSet(const MatrixGame& game, Player player,
                                 const Strategy& opponent);

// Guaranteed payoff of s under the sign convention "higher is better for both
// players": min_j (s^T A)_j for kRow, -max_i (A s)_i for kCol.
double WorstCasePayoff(const MatrixGame& game, Player player,
                       const Strategy& s);

// max(A y) - min(x^T A); nonnegative for every strategy pair and zero exactly
// at solutions of the game.
double DualityGap(const MatrixGame& game, const Strategy& x,
                  const Strategy& y);

// v* - worst-case payoff for kRow; max(A s) - v* for kCol. Nonnegative (up to
// float slack) whenever v_star is the game value.
double Exploitability(const MatrixGame& game, Player player, const Strategy& s,
                      double v_star);

struct ValueResult {
  double value = 0.0;
  Strategy row_nash;
  Strategy col_nash;
};

// Exact game value and a Nash strategy for each player, via a dense-tableau
// simplex solve of the value LP (payoffs shifted by a+1 to force positivity;
// Bland's rule precludes cycling). When an optimal pure strategy exists, the
// lowest-index one is reported, which keeps degenerate games deterministic.
ValueResult ExactValue(const MatrixGame& game);

}  // namespace fictplay

#endif  // FICTPLAY_MATRIX_GAME_H_
