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

#include "fictplay/io.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace fictplay {
namespace {

using ordered_json = nlohmann::ordered_json;

void AppendIndexField(std::string* out, int index) {
  if (index >= 0) *out += std::to_string(index + 1);
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("FormatDouble: to_chars failed");
  return std::string(buf, ptr);
}

MatrixGame ReadGameJson(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("game json: parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("payoffs")) {
    throw std::runtime_error("game json: expected object with rows, cols, payoffs");
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    throw std::runtime_error("game json: rows and cols must be integers");
  }
  const long long rows = doc["rows"].get<long long>();
  const long long cols = doc["cols"].get<long long>();
  if (rows < 1 || cols < 1) {
    throw std::runtime_error("game json: rows and cols must be >= 1");
  }
  const auto& payoffs = doc["payoffs"];
  if (!payoffs.is_array() ||
      payoffs.size() != static_cast<size_t>(rows * cols)) {
    throw std::runtime_error("game json: payoffs must be an array of rows*cols numbers");
  }
  std::vector<double> values;
  values.reserve(payoffs.size());
  for (const auto& entry : payoffs) {
    if (!entry.is_number()) {
      throw std::runtime_error("game json: payoffs entries must be numbers");
    }
    const double v = entry.get<double>();
    if (!std::isfinite(v)) {
      throw std::runtime_error("game json: payoffs entries must be finite");
    }
    values.push_back(v);
  }
  return MatrixGame(static_cast<int>(rows), static_cast<int>(cols),
                    std::move(values));
}

MatrixGame ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("game json: cannot open " + path);
  return ReadGameJson(in);
}

std::string GameToJson(const MatrixGame& game) {
  ordered_json doc;
  doc["rows"] = game.rows();
  doc["cols"] = game.cols();
  doc["payoffs"] = game.payoffs();
  return doc.dump(2) + "\n";
}

std::string TraceToCsv(const RunTrace& trace) {
  std::string out =
      "t,br_per_player,row_idx,col_idx,ant_row_idx,ant_col_idx,"
      "wc_row,wc_col,gap\n";
  for (const StepRecord& step : trace.steps) {
    out += std::to_string(step.t);
    out += ',';
    out += std::to_string(step.br_per_player);
    out += ',';
    out += std::to_string(step.row_index + 1);
    out += ',';
    out += std::to_string(step.col_index + 1);
    out += ',';
    AppendIndexField(&out, step.anticipated_row_index);
    out += ',';
    AppendIndexField(&out, step.anticipated_col_index);
    out += ',';
    out += FormatDouble(step.worst_case_row);
    out += ',';
    out += FormatDouble(step.worst_case_col);
    out += ',';
    out += FormatDouble(step.duality_gap);
    out += '\n';
  }
  return out;
}

std::string SeriesToCsv(const SeriesRecord& record) {
  std::string out = "x,stat_name,algorithm,value\n";
  for (const SeriesPoint& point : record.points) {
    out += FormatDouble(point.x);
    out += ',';
    out += point.stat;
    out += ',';
    out += point.algorithm;
    out += ',';
    out += FormatDouble(point.value);
    out += '\n';
  }
  return out;
}

std::string MetaToJson(const MetaMatrix& meta) {
  ordered_json doc;
  doc["n"] = meta.n;
  doc["rows"] = meta.rows;
  return doc.dump(2) + "\n";
}

void AtomicWriteFile(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  static std::atomic<unsigned> counter{0};
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  const fs::path tmp =
      dir / (target.filename().string() + ".tmp" +
             std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("rename failed for " + path);
  }
}

}  // namespace fictplay
