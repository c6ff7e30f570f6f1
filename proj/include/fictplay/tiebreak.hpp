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

#ifndef FICTPLAY_TIEBREAK_H_
#define FICTPLAY_TIEBREAK_H_

#include <cstdint>
#include <vector>

#include "fictplay/rng.hpp"

namespace fictplay {

// Policy for picking one index out of a best-response set. RandomUniform
// consumes a draw from the run's stream only when the set has two or more
// members, so tie-free runs are seed-independent.
struct TiebreakRule {
  enum class Kind { kFirstIndex, kLastIndex, kFixedOrder, kRandomUniform };

  Kind kind = Kind::kFirstIndex;
  std::vector<int> order;  // kFixedOrder: preference-ordered indices (0-based)
  uint64_t seed = 0;       // kRandomUniform: seed for the run's stream

  static TiebreakRule First();
  static TiebreakRule Last();
  // Throws std::invalid_argument unless `order` is a permutation of 0..k-1.
  static TiebreakRule Fixed(std::vector<int> order);
  static TiebreakRule Random(uint64_t seed);
};

// Selects from a nonempty ascending candidate set: the minimum (kFirstIndex),
// the maximum (kLastIndex), the candidate appearing earliest in `order`
// (kFixedOrder; throws if a candidate is missing from the permutation), or a
// uniform draw from `rng` (kRandomUniform; rng may be null only for the other
// kinds). Throws std::invalid_argument on an empty candidate set.
int SelectIndex(const TiebreakRule& rule, const std::vector<int>& candidates,
                SplitMix64* rng);

}  // namespace fictplay

#endif  // FICTPLAY_TIEBREAK_H_
