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

#include "fictplay/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fictplay/simplex.hpp"

namespace fictplay {

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> payoffs)
    : rows_(rows), cols_(cols), payoffs_(std::move(payoffs)), max_abs_(0.0) {
  if (rows_ < 1 || cols_ < 1) {
    throw std::invalid_argument("MatrixGame: rows and cols must be >= 1");
  }
  if (payoffs_.size() != static_cast<size_t>(rows_) * cols_) {
    throw std::invalid_argument("MatrixGame: payoff size mismatch");
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("MatrixGame: payoffs must be finite");
    }
    max_abs_ = std::max(max_abs_, std::abs(v));
  }
}

Strategy::Strategy(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("Strategy: empty");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("Strategy: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("Strategy: entries must sum to 1");
  }
}

Strategy Strategy::PointMass(int size, int index) {
  if (index < 0 || index >= size) {
    throw std::invalid_argument("Strategy: index out of range");
  }
  std::vector<double> p(size, 0.0);
  p[index] = 1.0;
  return Strategy(std::move(p));
}

Strategy Strategy::Uniform(int size) {
  if (size < 1) throw std::invalid_argument("Strategy: empty");
  return Strategy(std::vector<double>(size, 1.0 / size));
}

std::vector<double> RowPayoffVector(const MatrixGame& game, const Strategy& y) {
  if (y.size() != game.cols()) {
    throw std::invalid_argument("RowPayoffVector: dimension mismatch");
  }
  std::vector<double> out(game.rows(), 0.0);
  for (int i = 0; i < game.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < game.cols(); ++j) acc += game.At(i, j) * y[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> ColPayoffVector(const MatrixGame& game, const Strategy& x) {
  if (x.size() != game.rows()) {
    throw std::invalid_argument("ColPayoffVector: dimension mismatch");
  }
  std::vector<double> out(game.cols(), 0.0);
  for (int i = 0; i < game.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < game.cols(); ++j) out[j] += game.At(i, j) * xi;
  }
  return out;
}

std::vector<int> BestResponseSet(const MatrixGame& game, Player player,
                                 const Strategy& opponent) {
  const std::vector<double> payoff = player == Player::kRow
                                         ? RowPayoffVector(game, opponent)
                                         : ColPayoffVector(game, opponent);
  // kRow seeks the maximum of A y; kCol seeks the minimum of x^T A. Exact
  // float comparison: tie handling belongs to the caller.
  double best = payoff[0];
  for (double v : payoff) {
    best = player == Player::kRow ? std::max(best, v) : std::min(best, v);
  }
  std::vector<int> set;
  for (int k = 0; k < static_cast<int>(payoff.size()); ++k) {
    if (payoff[k] == best) set.push_back(k);
  }
  return set;
}

double WorstCasePayoff(const MatrixGame& game, Player player,
                       const Strategy& s) {
  if (player == Player::kRow) {
    const std::vector<double> u = ColPayoffVector(game, s);
    return *std::min_element(u.begin(), u.end());
  }
  const std::vector<double> v = RowPayoffVector(game, s);
  return -*std::max_element(v.begin(), v.end());
}

double DualityGap(const MatrixGame& game, const Strategy& x,
                  const Strategy& y) {
  const std::vector<double> v = RowPayoffVector(game, y);
  const std::vector<double> u = ColPayoffVector(game, x);
  return *std::max_element(v.begin(), v.end()) -
         *std::min_element(u.begin(), u.end());
}

double Exploitability(const MatrixGame& game, Player player, const Strategy& s,
                      double v_star) {
  if (player == Player::kRow) return v_star - WorstCasePayoff(game, player, s);
  return -WorstCasePayoff(game, player, s) - v_star;
}

namespace {

// Lowest-index pure strategy that is unexploitable at value v_star, or -1.
// Degenerate LPs have many optimal vertices; preferring a pure optimum keeps
// the reported equilibrium deterministic and human-readable.
int FindPureOptimum(const MatrixGame& game, Player player, double v_star) {
  const int size = player == Player::kRow ? game.rows() : game.cols();
  for (int k = 0; k < size; ++k) {
    const Strategy s = Strategy::PointMass(size, k);
    if (Exploitability(game, player, s, v_star) <= 1e-9) return k;
  }
  return -1;
}

Strategy NormalizeToStrategy(std::vector<double> weights) {
  double sum = 0.0;
  for (double& w : weights) {
    if (w <= 0.0) w = 0.0;  // clamp simplex round-off; also drops -0.0
    sum += w;
  }
  if (sum <= 0.0) throw std::logic_error("ExactValue: degenerate weights");
  for (double& w : weights) w /= sum;
  // Force an exact unit sum: assign the largest entry the remainder.
  double total = 0.0;
  size_t argmax = 0;
  for (size_t k = 0; k < weights.size(); ++k) {
    total += weights[k];
    if (weights[k] > weights[argmax]) argmax = k;
  }
  weights[argmax] += 1.0 - total;
  return Strategy(std::move(weights));
}

}  // namespace

ValueResult ExactValue(const MatrixGame& game) {
  const double shift = game.MaxAbsPayoff() + 1.0;
  const int m = game.rows();
  const int n = game.cols();
  std::vector<double> shifted(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      shifted[static_cast<size_t>(i) * n + j] = game.At(i, j) + shift;
    }
  }

  // With A' = A + shift entrywise positive, the column player's scaled
  // strategy solves max 1'z s.t. A'z <= 1, and the constraint duals are the
  // row player's scaled strategy; both normalize by the optimal objective
  // 1/v'.
  const UnitLpResult lp = SolveUnitLp(m, n, shifted);
  const double value = 1.0 / lp.objective - shift;

  ValueResult result{value, NormalizeToStrategy(lp.duals),
                     NormalizeToStrategy(lp.z)};
  if (const int i = FindPureOptimum(game, Player::kRow, value); i >= 0) {
    result.row_nash = Strategy::PointMass(m, i);
  }
  if (const int j = FindPureOptimum(game, Player::kCol, value); j >= 0) {
    result.col_nash = Strategy::PointMass(n, j);
  }
  return result;
}

}  // namespace fictplay
