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

#include "fictplay/population.hpp"

#include <algorithm>
#include <stdexcept>

namespace fictplay {

SamplerSpec SamplerSpec::Fp() { return {Kind::kFp, 0}; }

SamplerSpec SamplerSpec::Afp() { return {Kind::kAfp, 0}; }

SamplerSpec SamplerSpec::AfpWithFpInit(int fp_init_steps) {
  if (fp_init_steps < 0) {
    throw std::invalid_argument("SamplerSpec: negative FP prefix");
  }
  return {Kind::kAfpWithFpInit, fp_init_steps};
}

bool SamplerSpec::IsRetained(int j) const {
  if (kind == Kind::kFp) return true;
  const int k = kind == Kind::kAfp ? 0 : fp_init_steps;
  // FP prefix agents 1..k+1 are all retained; afterwards retained and
  // transient agents alternate, starting with a transient one.
  return j <= k + 1 || (j - k - 1) % 2 == 0;
}

std::vector<double> OpponentDistribution(const SamplerSpec& spec, int t) {
  if (t < 2) throw std::invalid_argument("OpponentDistribution: t must be >= 2");
  std::vector<bool> in_support(t - 1, false);
  for (int j = 1; j < t; ++j) {
    if (spec.kind == SamplerSpec::Kind::kFp || spec.IsRetained(j) || j == t - 1) {
      in_support[j - 1] = true;
    }
  }
  const int support =
      static_cast<int>(std::count(in_support.begin(), in_support.end(), true));
  std::vector<double> probs(t - 1, 0.0);
  for (int j = 0; j < t - 1; ++j) {
    if (in_support[j]) probs[j] = 1.0 / support;
  }
  return probs;
}

MetaMatrix BuildMetaMatrix(const SamplerSpec& spec, int n) {
  if (n < 2) throw std::invalid_argument("BuildMetaMatrix: n must be >= 2");
  MetaMatrix meta;
  meta.n = n;
  meta.rows.assign(n, std::vector<double>(n, 0.0));
  for (int t = 2; t <= n; ++t) {
    const std::vector<double> dist = OpponentDistribution(spec, t);
    for (int j = 0; j < t - 1; ++j) meta.rows[t - 1][j] = dist[j];
  }
  return meta;
}

PopulationRunResult PopulationRun(const MatrixGame& game, Algorithm mode,
                                  int iterations, const TiebreakRule& rule,
                                  int init) {
  if (mode != Algorithm::kFp && mode != Algorithm::kAfp) {
    throw std::invalid_argument("PopulationRun: mode must be FP or AFP");
  }
  if (game.rows() != game.cols()) {
    throw std::invalid_argument("PopulationRun: needs a square game");
  }
  if (init < 0 || init >= game.rows()) {
    throw std::invalid_argument("PopulationRun: init out of range");
  }
  const int n = game.rows();
  SplitMix64 rng(rule.seed);

  PopulationRunResult result;
  result.store.push_back(init);
  result.played.push_back(init);

  for (int t = 1; t <= iterations; ++t) {
    // Best response to the uniform mixture over the store. The argmax of
    // A * mixture is scale-invariant, so raw pure-strategy counts suffice.
    std::vector<double> payoff(n, 0.0);
    for (int action : result.store) {
      for (int i = 0; i < n; ++i) payoff[i] += game.At(i, action);
    }
    double best = *std::max_element(payoff.begin(), payoff.end());
    std::vector<int> candidates;
    for (int i = 0; i < n; ++i) {
      if (payoff[i] == best) candidates.push_back(i);
    }
    const int trained = SelectIndex(rule, candidates, &rng);
    result.trained.push_back(trained);
    result.store.push_back(trained);

    if (mode == Algorithm::kAfp) {
      // Even-numbered iterations produce a retained policy; the anticipation
      // trained in the previous iteration has served its purpose and leaves
      // the store (remove-after-train).
      if (t % 2 == 0) {
        result.store.erase(result.store.end() - 2);
        result.played.push_back(trained);
      }
    } else {
      result.played.push_back(trained);
    }
  }
  return result;
}

}  // namespace fictplay
