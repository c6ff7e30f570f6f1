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

#ifndef FICTPLAY_SIMPLEX_H_
#define FICTPLAY_SIMPLEX_H_

#include <vector>

namespace fictplay {

struct UnitLpResult {
  double objective = 0.0;       // sum of z at the optimum
  std::vector<double> z;        // primal solution, length n
  std::vector<double> duals;    // constraint duals, length m
};

// Solves: maximize sum(z) subject to M z <= 1, z >= 0, for a dense m x n
// matrix M (row-major) with all entries strictly positive. The all-slack
// basis is feasible, so no phase-1 is needed, and positivity bounds the
// optimum. Pivoting uses Bland's rule (lowest eligible index) with pivot
// tolerance 1e-10, which precludes cycling on degenerate vertices.
UnitLpResult SolveUnitLp(int m, int n, const std::vector<double>& matrix);

}  // namespace fictplay

#endif  // FICTPLAY_SIMPLEX_H_
