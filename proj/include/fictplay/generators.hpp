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

#ifndef FICTPLAY_GENERATORS_H_
#define FICTPLAY_GENERATORS_H_

#include <cstdint>
#include <string>

#include "fictplay/matrix_game.hpp"

namespace fictplay {

// Cyclic game on n >= 3 strategies: each strategy beats its predecessor and
// loses to its successor (mod n); entry (i, j) is +1 if i = j+1 (mod n), -1
// if i = j-1 (mod n), else 0. n = 3 is Rock Paper Scissors. Antisymmetric
// with value 0.
MatrixGame CyclicGame(int n);

// Transitive game on n >= 3 strategies: strategy i+1 is the unique best
// response to strategy i, and e_n is the unique pure Nash strategy. The two
// off-diagonals hold +/-(n - max(i, j) + 2)/n, i.e. entry (i, j) is
// (n-i+2)/n if i = j+1 and -(n-j+2)/n if j = i+1 (no wraparound);
// antisymmetric with value 0.
MatrixGame TransitiveGame(int n);

// TransitiveGame scaled by n, which makes every entry an integer. Scaling by
// a positive constant preserves best responses, so exactness-sensitive
// accumulator checks use this form.
MatrixGame ScaledTransitiveGame(int n);

// Rock Paper Scissors; identical to CyclicGame(3).
MatrixGame RpsGame();

// Rock Paper Scissors plus a fourth row "SafeRock" = [0, 0, 0.99]: never a
// best response to any pure column, yet every Nash equilibrium puts positive
// mass on it.
MatrixGame RpsSafeRockGame();

// m x n matrix of i.i.d. standard Gaussians drawn from a SplitMix64 stream
// via the Box-Muller transform, filled row-major in pairs with the final
// spare dropped. Identical seeds reproduce identical matrices bit-for-bit on
// every platform.
MatrixGame RandomGaussianGame(int m, int n, uint64_t seed);

// Parsed form of the CLI game grammar: "cyclic:N", "transitive:N", "rps",
// "rps-saferock", "gauss:MxN:SEED", "file:PATH".
struct GameSpec {
  enum class Kind { kCyclic, kTransitive, kRps, kRpsSafeRock, kGaussian, kFile };

  Kind kind = Kind::kRps;
  int rows = 0;       // kGaussian
  int cols = 0;       // kGaussian
  int n = 0;          // kCyclic, kTransitive
  uint64_t seed = 0;  // kGaussian
  std::string path;   // kFile

  // Throws std::invalid_argument on grammar violations.
  static GameSpec Parse(const std::string& text);

  // Canonical spec string (round-trips through Parse).
  std::string ToString() const;
};

// Materializes a GameSpec; kFile reads the JSON game format from disk.
MatrixGame BuildGame(const GameSpec& spec);

}  // namespace fictplay

#endif  // FICTPLAY_GENERATORS_H_
