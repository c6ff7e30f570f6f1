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
#include <stdexcept>
#include <vector>

#include "fictplay/dynamics.hpp"
#include "fictplay/generators.hpp"
#include "fictplay/population.hpp"
#include "fictplay/rng.hpp"
#include "fictplay/tiebreak.hpp"

namespace {

using fictplay::Algorithm;
using fictplay::Budget;
using fictplay::BuildMetaMatrix;
using fictplay::CyclicGame;
using fictplay::MatrixGame;
using fictplay::MetaMatrix;
using fictplay::OpponentDistribution;
using fictplay::PlayMode;
using fictplay::PopulationRun;
using fictplay::PopulationRunResult;
using fictplay::RandomGaussianGame;
using fictplay::Run;
using fictplay::RunTrace;
using fictplay::SamplerSpec;
using fictplay::SplitMix64;
using fictplay::TiebreakRule;

std::vector<int> PlayedRows(const RunTrace& trace) {
  std::vector<int> out;
  for (const auto& rec : trace.steps) out.push_back(rec.row_index);
  return out;
}

}  // namespace

TEST_CASE("uniform sampling weights every earlier agent equally") {
  const SamplerSpec fp = SamplerSpec::Fp();
  CHECK(OpponentDistribution(fp, 2) == std::vector<double>{1.0});
  const std::vector<double> at4 = OpponentDistribution(fp, 4);
  REQUIRE(at4.size() == 3);
  for (double p : at4) CHECK(std::abs(p - 1.0 / 3.0) <= 1e-15);
  CHECK_THROWS_AS(OpponentDistribution(fp, 1), std::invalid_argument);
}

TEST_CASE("alternating sampling keeps odd agents plus the newest one") {
  const SamplerSpec afp = SamplerSpec::Afp();
  CHECK(OpponentDistribution(afp, 2) == std::vector<double>{1.0});

  // t = 4: support is {1, 3}; agent 3 is both retained and most recent, so it
  // is not double-weighted.
  const std::vector<double> at4 = OpponentDistribution(afp, 4);
  REQUIRE(at4.size() == 3);
  CHECK(at4[0] == 0.5);
  CHECK(at4[1] == 0.0);
  CHECK(at4[2] == 0.5);

  // t = 5: support is {1, 3} union {4}.
  const std::vector<double> at5 = OpponentDistribution(afp, 5);
  REQUIRE(at5.size() == 4);
  CHECK(std::abs(at5[0] - 1.0 / 3.0) <= 1e-15);
  CHECK(at5[1] == 0.0);
  CHECK(std::abs(at5[2] - 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(at5[3] - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("retention marks the prefix and every second later agent") {
  const SamplerSpec spec = SamplerSpec::AfpWithFpInit(2);
  CHECK(spec.IsRetained(1));
  CHECK(spec.IsRetained(2));
  CHECK(spec.IsRetained(3));
  CHECK_FALSE(spec.IsRetained(4));
  CHECK(spec.IsRetained(5));
  CHECK_FALSE(spec.IsRetained(6));
  CHECK(spec.IsRetained(7));
  CHECK_THROWS_AS(SamplerSpec::AfpWithFpInit(-1), std::invalid_argument);

  // A zero-length prefix reduces to the plain alternating scheme.
  const SamplerSpec zero = SamplerSpec::AfpWithFpInit(0);
  const SamplerSpec afp = SamplerSpec::Afp();
  for (int j = 1; j <= 12; ++j) CHECK(zero.IsRetained(j) == afp.IsRetained(j));
}

TEST_CASE("meta matrices are lower triangular and row stochastic") {
  const MetaMatrix fp3 = BuildMetaMatrix(SamplerSpec::Fp(), 3);
  CHECK(fp3.rows[0] == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(fp3.rows[1] == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(fp3.rows[2] == std::vector<double>{0.5, 0.5, 0.0});

  const MetaMatrix afp4 = BuildMetaMatrix(SamplerSpec::Afp(), 4);
  CHECK(afp4.rows[3] == std::vector<double>{0.5, 0.0, 0.5, 0.0});

  for (const SamplerSpec& spec :
       {SamplerSpec::Fp(), SamplerSpec::Afp(), SamplerSpec::AfpWithFpInit(3)}) {
    const MetaMatrix meta = BuildMetaMatrix(spec, 11);
    REQUIRE(meta.n == 11);
    REQUIRE(meta.rows.size() == 11);
    for (int i = 0; i < meta.n; ++i) {
      REQUIRE(meta.rows[i].size() == 11);
      double sum = 0.0;
      for (int j = 0; j < meta.n; ++j) {
        if (j >= i) CHECK(meta.rows[i][j] == 0.0);  // strictly lower triangular
        sum += meta.rows[i][j];
      }
      if (i == 0) {
        CHECK(sum == 0.0);
      } else {
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(BuildMetaMatrix(SamplerSpec::Fp(), 1), std::invalid_argument);
}

TEST_CASE("alternating meta support hits only odd agents and the newest") {
  const MetaMatrix meta = BuildMetaMatrix(SamplerSpec::Afp(), 11);
  for (int i = 1; i < meta.n; ++i) {
    for (int j = 0; j < meta.n; ++j) {
      if (meta.rows[i][j] != 0.0) {
        // Column j holds agent j+1: either retained (odd) or most recent.
        CHECK(((j + 1) % 2 == 1 || j == i - 1));
      }
    }
  }
}

TEST_CASE("population training with exact responses replays the dynamics") {
  SplitMix64 seeds(424242);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixGame g = RandomGaussianGame(10, 10, seeds.NextU64());
    for (const TiebreakRule& rule :
         {TiebreakRule::First(), TiebreakRule::Random(trial)}) {
      CAPTURE(trial);

      const PopulationRunResult fp = PopulationRun(g, Algorithm::kFp, 50, rule);
      const RunTrace fp_trace = Run(g, Algorithm::kFp, PlayMode::kSymmetric,
                                    Budget::Steps(51), rule);
      CHECK(fp.played == PlayedRows(fp_trace));

      const PopulationRunResult afp =
          PopulationRun(g, Algorithm::kAfp, 50, rule);
      const RunTrace afp_trace = Run(g, Algorithm::kAfp, PlayMode::kSymmetric,
                                     Budget::Steps(26), rule);
      CHECK(afp.played == PlayedRows(afp_trace));
    }
  }

  // The 4-cycle game ties constantly, so this also pins the draw order of the
  // random rule between the two implementations.
  const MatrixGame c4 = CyclicGame(4);
  for (int s = 0; s < 5; ++s) {
    const TiebreakRule rule = TiebreakRule::Random(s);
    const PopulationRunResult fp = PopulationRun(c4, Algorithm::kFp, 40, rule);
    CHECK(fp.played == PlayedRows(Run(c4, Algorithm::kFp,
                                      PlayMode::kSymmetric, Budget::Steps(41),
                                      rule)));
    const PopulationRunResult afp =
        PopulationRun(c4, Algorithm::kAfp, 40, rule);
    CHECK(afp.played == PlayedRows(Run(c4, Algorithm::kAfp,
                                       PlayMode::kSymmetric,
                                       Budget::Steps(21), rule)));
  }
}

TEST_CASE("population training reproduces the known 3-cycle orbits") {
  const MatrixGame g = CyclicGame(3);
  const PopulationRunResult fp =
      PopulationRun(g, Algorithm::kFp, 9, TiebreakRule::First());
  CHECK(fp.played == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 2, 2, 0});
  CHECK(fp.store == fp.played);  // uniform mode never evicts
  CHECK(fp.trained == std::vector<int>{1, 1, 1, 2, 2, 2, 2, 2, 0});

  const PopulationRunResult afp =
      PopulationRun(g, Algorithm::kAfp, 10, TiebreakRule::First());
  CHECK(afp.played == std::vector<int>{0, 1, 1, 2, 2, 0});
  CHECK(afp.store == afp.played);  // anticipations evicted after use
  CHECK(afp.trained.size() == 10);
}

TEST_CASE("store sizes follow the retention schedule") {
  const MatrixGame g = CyclicGame(4);
  for (int iterations : {1, 2, 7, 8, 20}) {
    const PopulationRunResult fp =
        PopulationRun(g, Algorithm::kFp, iterations, TiebreakRule::First());
    CHECK(fp.store.size() == static_cast<size_t>(iterations + 1));
    const PopulationRunResult afp =
        PopulationRun(g, Algorithm::kAfp, iterations, TiebreakRule::First());
    CHECK(afp.store.size() ==
          static_cast<size_t>((iterations + 1) / 2 + 1));
  }
}

TEST_CASE("population training validates its inputs") {
  const MatrixGame rect = RandomGaussianGame(3, 4, 7);
  CHECK_THROWS_AS(
      PopulationRun(rect, Algorithm::kFp, 5, TiebreakRule::First()),
      std::invalid_argument);
  const MatrixGame g = CyclicGame(3);
  CHECK_THROWS_AS(
      PopulationRun(g, Algorithm::kNaiveAfp, 5, TiebreakRule::First()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      PopulationRun(g, Algorithm::kFp, 5, TiebreakRule::First(), 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      PopulationRun(g, Algorithm::kFp, 5, TiebreakRule::First(), -1),
      std::invalid_argument);
}
