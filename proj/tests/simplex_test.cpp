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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fictplay/generators.hpp"
#include "fictplay/matrix_game.hpp"
#include "fictplay/rng.hpp"
#include "fictplay/simplex.hpp"

namespace {

using fictplay::ExactValue;
using fictplay::MatrixGame;
using fictplay::Player;
using fictplay::SolveUnitLp;
using fictplay::ValueResult;

// Independent 2x2 oracle: the optimum of the lower envelope of two lines on
// p in [0, 1], evaluated at the endpoints and the crossing point.
double TwoByTwoValue(double a11, double a12, double a21, double a22) {
  auto payoff = [&](double p) {
    return std::min(p * a11 + (1 - p) * a21, p * a12 + (1 - p) * a22);
  };
  double best = std::max(payoff(0.0), payoff(1.0));
  const double denom = a11 - a12 - a21 + a22;
  if (denom != 0.0) {
    const double p = (a22 - a21) / denom;
    if (p > 0.0 && p < 1.0) best = std::max(best, payoff(p));
  }
  return best;
}

TEST_CASE("unit LP rejects nonpositive matrices and solves 1x1 exactly") {
  CHECK_THROWS_AS(SolveUnitLp(1, 1, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SolveUnitLp(1, 2, {1.0, -2.0}), std::invalid_argument);
  const auto r = SolveUnitLp(1, 1, {2.0});
  CHECK(std::abs(r.objective - 0.5) <= 1e-12);
  CHECK(std::abs(r.z[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.duals[0] - 0.5) <= 1e-12);
}

TEST_CASE("all integer 2x2 games match the envelope oracle") {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        for (int d = -3; d <= 3; ++d) {
          const MatrixGame g(2, 2, {double(a), double(b), double(c), double(d)});
          const ValueResult res = ExactValue(g);
          const double oracle = TwoByTwoValue(a, b, c, d);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(d);
          REQUIRE(std::abs(res.value - oracle) <= 1e-9);
          REQUIRE(Exploitability(g, Player::kRow, res.row_nash, res.value) <=
                  1e-8);
          REQUIRE(Exploitability(g, Player::kCol, res.col_nash, res.value) <=
                  1e-8);
        }
      }
    }
  }
}

TEST_CASE("random rectangular games solve to within 1e-8 exploitability") {
  fictplay::SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.NextIndex(5));
    const int n = 1 + static_cast<int>(rng.NextIndex(5));
    const MatrixGame g = fictplay::RandomGaussianGame(m, n, rng.NextU64());
    const ValueResult res = ExactValue(g);
    CHECK(Exploitability(g, Player::kRow, res.row_nash, res.value) <= 1e-8);
    CHECK(Exploitability(g, Player::kCol, res.col_nash, res.value) <= 1e-8);
    CHECK(res.value >= -g.MaxAbsPayoff() - 1e-9);
    CHECK(res.value <= g.MaxAbsPayoff() + 1e-9);

    // Swapping the players negates the value.
    std::vector<double> swapped(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        swapped[static_cast<size_t>(j) * m + i] = -g.At(i, j);
      }
    }
    const ValueResult dual = ExactValue(MatrixGame(n, m, swapped));
    CHECK(std::abs(dual.value + res.value) <= 1e-8);
  }
}

TEST_CASE("cyclic games have value zero") {
  for (int n = 3; n <= 10; ++n) {
    const ValueResult res = ExactValue(fictplay::CyclicGame(n));
    CHECK(std::abs(res.value) <= 1e-9);
  }
}

TEST_CASE("transitive games have value zero with the last pure row optimal") {
  for (int n = 3; n <= 10; ++n) {
    const MatrixGame g = fictplay::TransitiveGame(n);
    const ValueResult res = ExactValue(g);
    CHECK(std::abs(res.value) <= 1e-9);
    // The dominant pure strategy is returned exactly, not an LP vertex mix.
    CHECK(res.row_nash[n - 1] == 1.0);
    CHECK(res.col_nash[n - 1] == 1.0);
  }
}

TEST_CASE("the safe-rock variant has the derived rational value") {
  const ValueResult res = ExactValue(fictplay::RpsSafeRockGame());
  CHECK(std::abs(res.value - 33.0 / 199.0) <= 1e-12);
  const MatrixGame g = fictplay::RpsSafeRockGame();
  CHECK(Exploitability(g, Player::kRow, res.row_nash, res.value) <= 1e-8);
  CHECK(Exploitability(g, Player::kCol, res.col_nash, res.value) <= 1e-8);
}

TEST_CASE("degenerate single-line games solve to their best entry") {
  const ValueResult row_only = ExactValue(MatrixGame(1, 3, {3.0, -1.0, 2.0}));
  CHECK(std::abs(row_only.value + 1.0) <= 1e-12);
  CHECK(row_only.col_nash[1] == 1.0);
  const ValueResult col_only = ExactValue(MatrixGame(3, 1, {3.0, -1.0, 2.0}));
  CHECK(std::abs(col_only.value - 3.0) <= 1e-12);
  CHECK(col_only.row_nash[0] == 1.0);
}

}  // namespace
