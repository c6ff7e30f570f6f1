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

#ifndef FICTPLAY_IO_H_
#define FICTPLAY_IO_H_

#include <iosfwd>
#include <string>

#include "fictplay/dynamics.hpp"
#include "fictplay/experiments.hpp"
#include "fictplay/matrix_game.hpp"
#include "fictplay/population.hpp"

namespace fictplay {

// Shortest decimal string that round-trips to the same double.
std::string FormatDouble(double value);

// Game JSON: {"rows": m, "cols": n, "payoffs": [... row-major ...]}.
// Readers throw std::runtime_error on malformed input (missing keys, size
// mismatch, non-finite entries).
MatrixGame ReadGameJson(std::istream& in);
MatrixGame ReadGameFile(const std::string& path);
std::string GameToJson(const MatrixGame& game);

// Trace CSV with header
//   t,br_per_player,row_idx,col_idx,ant_row_idx,ant_col_idx,wc_row,wc_col,gap
// Indices are 1-based; anticipated fields are empty when absent.
std::string TraceToCsv(const RunTrace& trace);

// Series CSV with header x,stat_name,algorithm,value.
std::string SeriesToCsv(const SeriesRecord& record);

// Meta-matrix JSON: {"n": n, "rows": [[...], ...]}.
std::string MetaToJson(const MetaMatrix& meta);

// Writes to a temp file in the target directory, then renames over `path`,
// so readers never observe a partial file.
void AtomicWriteFile(const std::string& path, const std::string& contents);

}  // namespace fictplay

#endif  // FICTPLAY_IO_H_
