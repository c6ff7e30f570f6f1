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

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fictplay/experiments.hpp"
#include "fictplay/io.hpp"

namespace {

using fictplay::AgrestiCoull;
using fictplay::CyclicRates;
using fictplay::FpInitSweep;
using fictplay::ProportionBetter;
using fictplay::RateFit;
using fictplay::RpsBand;
using fictplay::SeriesPoint;
using fictplay::SeriesRecord;
using fictplay::SeriesToCsv;
using fictplay::SizeSweep;
using fictplay::TransitiveRates;

// Convenience lookup: value of the unique point matching (x, stat, algo).
double PointValue(const SeriesRecord& record, double x, const std::string& stat,
                  const std::string& algorithm) {
  const SeriesPoint* found = nullptr;
  for (const SeriesPoint& p : record.points) {
    if (p.x == x && p.stat == stat && p.algorithm == algorithm) {
      REQUIRE(found == nullptr);
      found = &p;
    }
  }
  REQUIRE(found != nullptr);
  return found->value;
}

}  // namespace

TEST_CASE("binomial intervals match a hand-computed reference") {
  // 130 successes out of 200 at z = 1.96, evaluated independently with
  // high-precision decimal arithmetic.
  const auto [lo, hi] = AgrestiCoull(130, 200, 1.96);
  CHECK(std::abs(lo - 0.58157356802935597) <= 1e-12);
  CHECK(std::abs(hi - 0.71277263019514776) <= 1e-12);
  CHECK(lo < hi);

  // Extreme counts clamp to [0, 1].
  const auto [lo0, hi0] = AgrestiCoull(0, 5, 1.96);
  CHECK(lo0 == 0.0);
  CHECK(hi0 < 1.0);
  const auto [lo5, hi5] = AgrestiCoull(5, 5, 1.96);
  CHECK(lo5 > 0.0);
  CHECK(hi5 == 1.0);

  CHECK_THROWS_AS(AgrestiCoull(1, 0, 1.96), std::invalid_argument);
  CHECK_THROWS_AS(AgrestiCoull(-1, 10, 1.96), std::invalid_argument);
  CHECK_THROWS_AS(AgrestiCoull(11, 10, 1.96), std::invalid_argument);
}

TEST_CASE("log-log fits recover exact power laws") {
  std::vector<std::pair<double, double>> decay;
  std::vector<std::pair<double, double>> growth;
  for (int t = 1; t <= 20; ++t) {
    decay.emplace_back(t, 7.0 / t);
    growth.emplace_back(t, 3.0 * std::sqrt(static_cast<double>(t)));
  }
  CHECK(std::abs(RateFit(decay) - (-1.0)) <= 1e-9);
  CHECK(std::abs(RateFit(growth) - 0.5) <= 1e-9);

  std::vector<std::pair<double, double>> tiny(decay.begin(),
                                              decay.begin() + 9);
  CHECK_THROWS_AS(RateFit(tiny), std::invalid_argument);
  std::vector<std::pair<double, double>> bad = decay;
  bad[3].second = 0.0;
  CHECK_THROWS_AS(RateFit(bad), std::invalid_argument);
  const std::vector<std::pair<double, double>> flat(12, {2.0, 1.0});
  CHECK_THROWS_AS(RateFit(flat), std::invalid_argument);
}

TEST_CASE("the rock-paper-scissors band stays at or below the value") {
  const SeriesRecord record = RpsBand(/*replicates=*/50, /*br_budget=*/20,
                                      /*base_seed=*/7, /*jobs=*/1);
  CHECK(record.x_kind == "best_responses");
  // Per response count: three FP quantiles and the exact value; AFP quantiles
  // join on even counts only.
  CHECK(record.points.size() == 20 * 4 + 10 * 3);

  for (const SeriesPoint& p : record.points) {
    if (p.stat == "value") {
      CHECK(p.algorithm == "exact");
      CHECK(std::abs(p.value) <= 1e-9);  // the game is symmetric
    } else {
      CHECK(p.value <= 1e-12);  // worst cases never beat the value
    }
    if (p.algorithm == "afp") {
      CHECK(static_cast<long long>(p.x) % 2 == 0);
    }
  }
  for (int r = 1; r <= 20; ++r) {
    const double x = static_cast<double>(r);
    CHECK(PointValue(record, x, "p10", "fp") <=
          PointValue(record, x, "median", "fp"));
    CHECK(PointValue(record, x, "median", "fp") <=
          PointValue(record, x, "p90", "fp"));
  }

  // Reruns reproduce the record bit for bit.
  const SeriesRecord again = RpsBand(50, 20, 7, 1);
  CHECK(SeriesToCsv(record) == SeriesToCsv(again));

  CHECK_THROWS_AS(RpsBand(0, 20, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(RpsBand(50, 15, 7, 1), std::invalid_argument);
}

TEST_CASE("head-to-head proportions count ties for the challenger") {
  // On a 1x1 game both algorithms are identical, so every comparison ties.
  const std::vector<int> budgets = {2, 4};
  const SeriesRecord whole =
      ProportionBetter(1, 1, 10, budgets, 3, 1, /*split_ties=*/false);
  CHECK(whole.x_kind == "best_responses");
  CHECK(whole.points.size() == budgets.size() * 3);
  for (int r : budgets) {
    CHECK(PointValue(whole, r, "proportion", "afp_vs_fp") == 1.0);
    CHECK(PointValue(whole, r, "ci_lo", "afp_vs_fp") <
          PointValue(whole, r, "ci_hi", "afp_vs_fp"));
  }

  const SeriesRecord split =
      ProportionBetter(1, 1, 10, budgets, 3, 1, /*split_ties=*/true);
  for (int r : budgets) {
    CHECK(PointValue(split, r, "proportion", "afp_vs_fp") == 0.5);
  }

  CHECK_THROWS_AS(ProportionBetter(2, 2, 10, {3}, 3, 1, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProportionBetter(2, 2, 10, {}, 3, 1, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProportionBetter(2, 2, 0, {2}, 3, 1, false),
                  std::invalid_argument);
}

TEST_CASE("parallel execution does not change experiment output") {
  const std::vector<int> budgets = {2, 10, 50};
  const SeriesRecord serial = ProportionBetter(4, 4, 20, budgets, 9, 1, false);
  const SeriesRecord threaded =
      ProportionBetter(4, 4, 20, budgets, 9, 4, false);
  CHECK(SeriesToCsv(serial) == SeriesToCsv(threaded));

  const SeriesRecord band1 = RpsBand(30, 16, 5, 1);
  const SeriesRecord band3 = RpsBand(30, 16, 5, 3);
  CHECK(SeriesToCsv(band1) == SeriesToCsv(band3));
}

TEST_CASE("size sweeps key the random-game family by size") {
  const SeriesRecord two = SizeSweep({2}, 20, 20, 11, 1);
  const SeriesRecord both = SizeSweep({2, 3}, 20, 20, 11, 2);
  CHECK(both.x_kind == "matrix_size");
  CHECK(two.points.size() == 6);
  CHECK(both.points.size() == 12);
  // Adding a size must not disturb the families already computed.
  for (size_t k = 0; k < two.points.size(); ++k) {
    CHECK(both.points[k].x == two.points[k].x);
    CHECK(both.points[k].stat == two.points[k].stat);
    CHECK(both.points[k].algorithm == two.points[k].algorithm);
    CHECK(both.points[k].value == two.points[k].value);
  }
  for (int size : {2, 3}) {
    for (const std::string& alg : {std::string("fp"), std::string("afp")}) {
      CHECK(PointValue(both, size, "p10", alg) <=
            PointValue(both, size, "p90", alg));
    }
  }
  CHECK_THROWS_AS(SizeSweep({}, 20, 20, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(SizeSweep({0}, 20, 20, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(SizeSweep({2}, 20, 7, 11, 1), std::invalid_argument);
}

TEST_CASE("cyclic drift growth fits near the square-root law") {
  const SeriesRecord record =
      CyclicRates({3}, /*num_seeds=*/3, /*t_max=*/2000, /*fit_from=*/50,
                  /*base_seed=*/1, /*jobs=*/1);
  CHECK(record.x_kind == "matrix_size");
  CHECK(record.points.size() == 3);
  const double slope = PointValue(record, 3, "mean", "fp");
  CHECK(slope > 0.2);
  CHECK(slope < 0.8);
  CHECK(PointValue(record, 3, "p10", "fp") <= PointValue(record, 3, "p90", "fp"));
  CHECK_THROWS_AS(CyclicRates({3}, 3, 20, 15, 1, 1), std::invalid_argument);
}

TEST_CASE("transitive gap decay fits near the reciprocal law") {
  const SeriesRecord record = TransitiveRates({10}, /*t_max=*/1000, 0, 1);
  REQUIRE(record.points.size() == 1);
  CHECK(record.points[0].x == 10.0);
  CHECK(record.points[0].stat == "mean");
  CHECK(record.points[0].algorithm == "afp");
  CHECK(std::abs(record.points[0].value - (-1.0)) <= 0.1);
  CHECK_THROWS_AS(TransitiveRates({1}, 1000, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(TransitiveRates({100}, 50, 0, 1), std::invalid_argument);
}

TEST_CASE("prefix sweeps carry an exact coin-flip baseline") {
  const std::vector<int> budgets = {2, 6};
  const SeriesRecord record =
      FpInitSweep({0, 3}, 3, 3, /*num_matrices=*/6, budgets, 17, 2);
  CHECK(record.x_kind == "best_responses");
  // Per budget: two prefix comparisons plus the baseline, three stats each.
  CHECK(record.points.size() == budgets.size() * 3 * 3);
  for (int r : budgets) {
    CHECK(PointValue(record, r, "proportion", "fp_vs_fp") == 0.5);
    // The prefix labels carry the prefix length.
    PointValue(record, r, "proportion", "afp_fp_init:0_vs_fp");
    PointValue(record, r, "proportion", "afp_fp_init:3_vs_fp");
  }
  CHECK_THROWS_AS(FpInitSweep({}, 3, 3, 6, budgets, 17, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FpInitSweep({-1}, 3, 3, 6, budgets, 17, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FpInitSweep({0}, 3, 3, 6, {4, 5}, 17, 1),
                  std::invalid_argument);
}
