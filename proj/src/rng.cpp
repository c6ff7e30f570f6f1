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

#include "fictplay/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fictplay {

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t DeriveSeed(uint64_t base_seed, uint64_t replicate, uint64_t tag) {
  return Mix64(base_seed + 0x9E3779B97F4A7C15ull * (replicate + 1) +
               0x94D049BB133111EBull * tag);
}

uint64_t SplitMix64::NextU64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return Mix64(state_);
}

double SplitMix64::NextUnit() {
  // (raw >> 11) is uniform on [0, 2^53); +1 shifts the range to (0, 2^53].
  return static_cast<double>((NextU64() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::NextGaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = NextUnit();
  const double u2 = NextUnit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

uint64_t SplitMix64::NextIndex(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("NextIndex: bound must be >= 1");
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(NextU64()) * bound) >> 64);
}

}  // namespace fictplay
