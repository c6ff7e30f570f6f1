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

#include "fictplay/tiebreak.hpp"

#include <algorithm>
#include <stdexcept>

namespace fictplay {

TiebreakRule TiebreakRule::First() { return {Kind::kFirstIndex, {}, 0}; }

TiebreakRule TiebreakRule::Last() { return {Kind::kLastIndex, {}, 0}; }

TiebreakRule TiebreakRule::Fixed(std::vector<int> order) {
  if (order.empty()) {
    throw std::invalid_argument("TiebreakRule: order must not be empty");
  }
  std::vector<bool> seen(order.size(), false);
  for (int v : order) {
    if (v < 0 || v >= static_cast<int>(order.size()) || seen[v]) {
      throw std::invalid_argument("TiebreakRule: order must be a permutation");
    }
    seen[v] = true;
  }
  return {Kind::kFixedOrder, std::move(order), 0};
}

TiebreakRule TiebreakRule::Random(uint64_t seed) {
  return {Kind::kRandomUniform, {}, seed};
}

int SelectIndex(const TiebreakRule& rule, const std::vector<int>& candidates,
                SplitMix64* rng) {
  if (candidates.empty()) {
    throw std::invalid_argument("SelectIndex: empty candidate set");
  }
  if (candidates.size() == 1) return candidates[0];
  switch (rule.kind) {
    case TiebreakRule::Kind::kFirstIndex:
      return *std::min_element(candidates.begin(), candidates.end());
    case TiebreakRule::Kind::kLastIndex:
      return *std::max_element(candidates.begin(), candidates.end());
    case TiebreakRule::Kind::kFixedOrder:
      for (int preferred : rule.order) {
        if (std::find(candidates.begin(), candidates.end(), preferred) !=
            candidates.end()) {
          return preferred;
        }
      }
      throw std::invalid_argument("SelectIndex: candidate outside the order");
    case TiebreakRule::Kind::kRandomUniform:
      if (rng == nullptr) {
        throw std::invalid_argument("SelectIndex: random rule needs a stream");
      }
      return candidates[rng->NextIndex(candidates.size())];
  }
  throw std::logic_error("SelectIndex: bad kind");
}

}  // namespace fictplay
