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

#ifndef CONETYPE_MATRIX_IO_HPP_
#define CONETYPE_MATRIX_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "conetype/cone_matrix.hpp"

namespace conetype {

// Block text layout:
//
//   # comment
//   block <i> <j> <rows> <cols>
//   <rows lines of cols 0/1 entries>
//
// Blocks are numbered by length class from 1; omitted blocks are zero.
// The writer emits nonzero blocks column by column.
ConeMatrix read_blocks(std::istream& in, const std::vector<int>& class_starts);
ConeMatrix read_blocks_file(const std::filesystem::path& path,
                            const std::vector<int>& class_starts);
void write_blocks(std::ostream& out, const ConeMatrix& m);

void write_csv(std::ostream& out, const ConeMatrix& m);
nlohmann::json matrix_to_json(const ConeMatrix& m);

// Class partition of the genus-2 table: 8, 16, 16, 8.
std::vector<int> genus2_class_starts();

}  // namespace conetype

#endif  // CONETYPE_MATRIX_IO_HPP_
