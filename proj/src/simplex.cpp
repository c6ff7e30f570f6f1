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

#include "fictplay/simplex.hpp"

#include <stdexcept>

namespace fictplay {
namespace {

constexpr double kPivotTol = 1e-10;

}  // namespace

UnitLpResult SolveUnitLp(int m, int n, const std::vector<double>& matrix) {
  if (m < 1 || n < 1) throw std::invalid_argument("SolveUnitLp: empty matrix");
  if (matrix.size() != static_cast<size_t>(m) * n) {
    throw std::invalid_argument("SolveUnitLp: size mismatch");
  }
  for (double v : matrix) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("SolveUnitLp: entries must be positive");
    }
  }

  // Tableau columns: n structural variables, m slacks, then the RHS.
  const int width = n + m + 1;
  std::vector<std::vector<double>> tab(m, std::vector<double>(width, 0.0));
  std::vector<double> obj(width, 0.0);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = matrix[static_cast<size_t>(i) * n + j];
    tab[i][n + i] = 1.0;
    tab[i][width - 1] = 1.0;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) obj[j] = 1.0;

  // Bland's rule: lowest-index entering column, lowest-index basic variable
  // among minimum-ratio rows. Guaranteed to terminate.
  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (obj[j] > kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] > kPivotTol) {
        const double ratio = tab[i][width - 1] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw std::logic_error("SolveUnitLp: unbounded");

    const double pivot = tab[leave][enter];
    for (int j = 0; j < width; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0.0) continue;
      const double factor = tab[i][enter];
      for (int j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
      tab[i][enter] = 0.0;
    }
    const double ofactor = obj[enter];
    if (ofactor != 0.0) {
      for (int j = 0; j < width; ++j) obj[j] -= ofactor * tab[leave][j];
      obj[enter] = 0.0;
    }
    basis[leave] = enter;
  }

  UnitLpResult result;
  result.objective = -obj[width - 1];
  result.z.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.z[basis[i]] = tab[i][width - 1];
  }
  result.duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) result.duals[i] = -obj[n + i];
  return result;
}

}  // namespace fictplay
