// Copyright 2026 The conetype Authors
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

#include "conetype/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "conetype/error.hpp"

namespace conetype {

std::vector<int> genus2_class_starts() { return {0, 8, 24, 40, 48}; }

ConeMatrix read_blocks(std::istream& in, const std::vector<int>& class_starts) {
  ConeMatrix m(class_starts);
  const int classes = m.class_count();
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::vector<bool> seen(static_cast<std::size_t>(classes * classes), false);
  while (next_line()) {
    std::istringstream hs(line);
    std::string kw;
    int i = 0, j = 0, rows = 0, cols = 0;
    if (!(hs >> kw >> i >> j >> rows >> cols) || kw != "block") {
      throw ParseError("expected 'block <i> <j> <rows> <cols>' on line " + std::to_string(lineno));
    }
    if (i < 1 || j < 1 || i > classes || j > classes) {
      throw ParseError("block index out of range on line " + std::to_string(lineno));
    }
    if (rows != m.class_size(i) || cols != m.class_size(j)) {
      throw ParseError("block shape does not match the class sizes on line " +
                           std::to_string(lineno));
    }
    if (seen[(i - 1) * classes + (j - 1)]) {
      throw ParseError("duplicate block on line " + std::to_string(lineno));
    }
    seen[(i - 1) * classes + (j - 1)] = true;
    for (int r = 0; r < rows; ++r) {
      if (!next_line()) throw ParseError("truncated block");
      std::istringstream rs(line);
      for (int c = 0; c < cols; ++c) {
        int v = -1;
        if (!(rs >> v) || (v != 0 && v != 1)) {
          throw ParseError("expected " + std::to_string(cols) + " 0/1 entries on line " +
                               std::to_string(lineno));
        }
        m.set(class_starts[i - 1] + r, class_starts[j - 1] + c, static_cast<std::uint8_t>(v));
      }
      int extra;
      if (rs >> extra) throw ParseError("too many entries on line " + std::to_string(lineno));
    }
  }
  return m;
}

ConeMatrix read_blocks_file(const std::filesystem::path& path,
                            const std::vector<int>& class_starts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix fixture '" + path.string() + "'");
  return read_blocks(in, class_starts);
}

void write_blocks(std::ostream& out, const ConeMatrix& m) {
  bool first = true;
  for (int j = 1; j <= m.class_count(); ++j) {
    for (int i = 1; i <= m.class_count(); ++i) {
      if (m.block_is_zero(i, j)) continue;
      if (!first) out << "\n";
      first = false;
      out << "block " << i << " " << j << " " << m.class_size(i) << " " << m.class_size(j) << "\n";
      for (const auto& row : m.block(i, j)) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << int(row[c]);
        out << "\n";
      }
    }
  }
}

void write_csv(std::ostream& out, const ConeMatrix& m) {
  for (int r = 0; r < m.order(); ++r) {
    for (int c = 0; c < m.order(); ++c) out << (c ? "," : "") << int(m(r, c));
    out << "\n";
  }
}

nlohmann::json matrix_to_json(const ConeMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.order(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.order(); ++c) row.push_back(int(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace conetype
