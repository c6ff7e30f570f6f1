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

#include "fictplay/generators.hpp"

#include <charconv>
#include <stdexcept>

#include "fictplay/io.hpp"
#include "fictplay/rng.hpp"

namespace fictplay {
namespace {

// Integer-valued cells of the transitive game's n-scaled form: +(n-i+2) just
// below the diagonal, the antisymmetric mirror just above it.
double ScaledTransitiveEntry(int n, int i, int j) {
  if (i == j + 1) return static_cast<double>(n - i + 1);  // 0-based i: n-(i+1)+2
  if (j == i + 1) return -static_cast<double>(n - j + 1);
  return 0.0;
}

template <typename T>
T ParseNumber(const std::string& text, size_t begin, size_t end) {
  T out{};
  const char* first = text.data() + begin;
  const char* last = text.data() + end;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("GameSpec: bad number in '" + text + "'");
  }
  return out;
}

}  // namespace

MatrixGame CyclicGame(int n) {
  if (n < 3) throw std::invalid_argument("CyclicGame: n must be >= 3");
  std::vector<double> payoffs(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    payoffs[static_cast<size_t>(i) * n + (i + n - 1) % n] = 1.0;
    payoffs[static_cast<size_t>(i) * n + (i + 1) % n] = -1.0;
  }
  return MatrixGame(n, n, std::move(payoffs));
}

MatrixGame TransitiveGame(int n) {
  if (n < 3) throw std::invalid_argument("TransitiveGame: n must be >= 3");
  std::vector<double> payoffs(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      payoffs[static_cast<size_t>(i) * n + j] = ScaledTransitiveEntry(n, i, j) / n;
    }
  }
  return MatrixGame(n, n, std::move(payoffs));
}

MatrixGame ScaledTransitiveGame(int n) {
  if (n < 3) throw std::invalid_argument("ScaledTransitiveGame: n must be >= 3");
  std::vector<double> payoffs(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      payoffs[static_cast<size_t>(i) * n + j] = ScaledTransitiveEntry(n, i, j);
    }
  }
  return MatrixGame(n, n, std::move(payoffs));
}

MatrixGame RpsGame() { return CyclicGame(3); }

MatrixGame RpsSafeRockGame() {
  return MatrixGame(4, 3,
                    {0.0, -1.0, 1.0,    //
                     1.0, 0.0, -1.0,    //
                     -1.0, 1.0, 0.0,    //
                     0.0, 0.0, 0.99});
}

MatrixGame RandomGaussianGame(int m, int n, uint64_t seed) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("RandomGaussianGame: dims must be >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<double> payoffs(static_cast<size_t>(m) * n);
  for (double& p : payoffs) p = rng.NextGaussian();
  return MatrixGame(m, n, std::move(payoffs));
}

GameSpec GameSpec::Parse(const std::string& text) {
  GameSpec spec;
  if (text == "rps") {
    spec.kind = Kind::kRps;
    return spec;
  }
  if (text == "rps-saferock") {
    spec.kind = Kind::kRpsSafeRock;
    return spec;
  }
  if (text.rfind("cyclic:", 0) == 0) {
    spec.kind = Kind::kCyclic;
    spec.n = ParseNumber<int>(text, 7, text.size());
    if (spec.n < 3) throw std::invalid_argument("GameSpec: cyclic needs N >= 3");
    return spec;
  }
  if (text.rfind("transitive:", 0) == 0) {
    spec.kind = Kind::kTransitive;
    spec.n = ParseNumber<int>(text, 11, text.size());
    if (spec.n < 3) {
      throw std::invalid_argument("GameSpec: transitive needs N >= 3");
    }
    return spec;
  }
  if (text.rfind("gauss:", 0) == 0) {
    const size_t x = text.find('x', 6);
    const size_t colon = text.find(':', 6);
    if (x == std::string::npos || colon == std::string::npos || x > colon) {
      throw std::invalid_argument("GameSpec: expected gauss:MxN:SEED");
    }
    spec.kind = Kind::kGaussian;
    spec.rows = ParseNumber<int>(text, 6, x);
    spec.cols = ParseNumber<int>(text, x + 1, colon);
    spec.seed = ParseNumber<uint64_t>(text, colon + 1, text.size());
    if (spec.rows < 1 || spec.cols < 1) {
      throw std::invalid_argument("GameSpec: gauss dims must be >= 1");
    }
    return spec;
  }
  if (text.rfind("file:", 0) == 0) {
    spec.kind = Kind::kFile;
    spec.path = text.substr(5);
    if (spec.path.empty()) throw std::invalid_argument("GameSpec: empty path");
    return spec;
  }
  throw std::invalid_argument("GameSpec: unknown game '" + text + "'");
}

std::string GameSpec::ToString() const {
  switch (kind) {
    case Kind::kCyclic:
      return "cyclic:" + std::to_string(n);
    case Kind::kTransitive:
      return "transitive:" + std::to_string(n);
    case Kind::kRps:
      return "rps";
    case Kind::kRpsSafeRock:
      return "rps-saferock";
    case Kind::kGaussian:
      return "gauss:" + std::to_string(rows) + "x" + std::to_string(cols) +
             ":" + std::to_string(seed);
    case Kind::kFile:
      return "file:" + path;
  }
  throw std::logic_error("GameSpec: bad kind");
}

MatrixGame BuildGame(const GameSpec& spec) {
  switch (spec.kind) {
    case GameSpec::Kind::kCyclic:
      return CyclicGame(spec.n);
    case GameSpec::Kind::kTransitive:
      return TransitiveGame(spec.n);
    case GameSpec::Kind::kRps:
      return RpsGame();
    case GameSpec::Kind::kRpsSafeRock:
      return RpsSafeRockGame();
    case GameSpec::Kind::kGaussian:
      return RandomGaussianGame(spec.rows, spec.cols, spec.seed);
    case GameSpec::Kind::kFile:
      return ReadGameFile(spec.path);
  }
  throw std::logic_error("BuildGame: bad kind");
}

}  // namespace fictplay
