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

#ifndef FICTPLAY_RNG_H_
#define FICTPLAY_RNG_H_

#include <cstdint>

namespace fictplay {

// SplitMix64 finalizer (Steele/Lea/Flood constants). Stateless; used both as
// the generator's output function and for seed derivation.
uint64_t Mix64(uint64_t z);

// Derives the seed for one replicate's stream from a base seed, the replicate
// index, and a purpose tag. The mix is frozen so that adding replicates or
// running replicates in a different order never perturbs existing streams.
uint64_t DeriveSeed(uint64_t base_seed, uint64_t replicate, uint64_t tag);

// Stream purpose tags for DeriveSeed. kHybridTiebreakTagBase + k tags the
// tiebreak stream of AFP initialized with k steps of FP.
inline constexpr uint64_t kGameGenTag = 0;
inline constexpr uint64_t kFpTiebreakTag = 1;
inline constexpr uint64_t kAfpTiebreakTag = 2;
inline constexpr uint64_t kNaiveAfpTiebreakTag = 3;
inline constexpr uint64_t kHybridTiebreakTagBase = 4;

// Deterministic 64-bit PRNG with a frozen output sequence on every platform.
// Gaussians come from the Box-Muller transform; the second variate of each
// pair is cached and handed out on the next call, so a discarded generator
// drops at most one spare.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t NextU64();

  // Uniform double in (0, 1]; 53-bit resolution. Never returns 0, so it is
  // safe to take its logarithm.
  double NextUnit();

  // Standard normal variate.
  double NextGaussian();

  // Uniform integer in [0, bound) via 128-bit multiply-shift; bound >= 1.
  uint64_t NextIndex(uint64_t bound);

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fictplay

#endif  // FICTPLAY_RNG_H_
