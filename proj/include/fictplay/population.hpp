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

#ifndef FICTPLAY_POPULATION_H_
#define FICTPLAY_POPULATION_H_

#include <cstdint>
#include <vector>

#include "fictplay/dynamics.hpp"
#include "fictplay/matrix_game.hpp"
#include "fictplay/tiebreak.hpp"

namespace fictplay {

// Opponent-sampling scheme that realizes FP or AFP as a population training
// schedule. Agent 1 is the arbitrary initial strategy; agent t > 1 trains
// against a uniform mixture of earlier agents. Under the AFP schedule the
// odd-indexed agents are the retained ("played") strategies and the
// even-indexed ones are transient anticipations; kAfpWithFpInit keeps the
// first fp_init_steps + 1 agents unconditionally (the FP prefix) and applies
// the alternation after them.
struct SamplerSpec {
  enum class Kind { kFp, kAfp, kAfpWithFpInit };

  Kind kind = Kind::kFp;
  int fp_init_steps = 0;  // kAfpWithFpInit; 0 reduces to kAfp

  static SamplerSpec Fp();
  static SamplerSpec Afp();
  static SamplerSpec AfpWithFpInit(int fp_init_steps);

  // True iff agent j (1-based) is retained in the training mixture.
  bool IsRetained(int j) const;
};

// Opponent distribution for learner t >= 2 over agents 1..t-1: uniform over
// all of them (kFp) or over the retained agents plus the most recent one
// (kAfp variants; a set union, so no double weight when agent t-1 is
// retained). Probabilities are exact multiples of 1/support-size.
std::vector<double> OpponentDistribution(const SamplerSpec& spec, int t);

// Row-stochastic opponent matrix: row i is OpponentDistribution(spec, i)
// zero-padded to length n; row 1 is all zeros (no prior opponents). Strictly
// lower triangular by construction.
struct MetaMatrix {
  int n = 0;
  std::vector<std::vector<double>> rows;
};

MetaMatrix BuildMetaMatrix(const SamplerSpec& spec, int n);

// Result of the exact-oracle population loop. Policies are pure strategies,
// recorded by action index. `played` holds the retained sequence (equal to
// the dynamics play sequence under matching tiebreaks); `store` holds the
// final store contents in insertion order.
struct PopulationRunResult {
  std::vector<int> played;
  std::vector<int> trained;  // every trained policy, in training order
  std::vector<int> store;
};

// Self-play population training on a square game with the exact best
// response in place of a learned one: iteration t trains a policy against
// the uniform mixture over the current store and appends it; in kAfp mode
// every second trained policy (the anticipation) is removed once the next
// one has trained against it. `iterations` counts training steps; the store
// starts with the single initial policy e_init.
PopulationRunResult PopulationRun(const MatrixGame& game, Algorithm mode,
                                  int iterations, const TiebreakRule& rule,
                                  int init = 0);

}  // namespace fictplay

#endif  // FICTPLAY_POPULATION_H_
