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

#ifndef CONETYPE_TOOLS_SELFCHECK_HPP_
#define CONETYPE_TOOLS_SELFCHECK_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace conetype::selfcheck {

struct Options {
  std::filesystem::path fixture;
  std::uint64_t max_ball = 20'000'000;
  std::uint64_t seed = 20240229;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  // Fills passed and detail; the runner adds timing and enforces the limit.
  std::function<void(const Options&, Result&)> run;
};

const std::vector<Criterion>& criteria();

Result run_one(const Criterion& c, const Options& options);
// One line: PASS/FAIL, id, name, time against limit, detail.
std::string format_line(const Result& r);

}  // namespace conetype::selfcheck

#endif  // CONETYPE_TOOLS_SELFCHECK_HPP_
