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

#ifndef CONETYPE_TESTS_TEST_SUPPORT_HPP_
#define CONETYPE_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <string>

#include "conetype/ball.hpp"
#include "conetype/cone_matrix.hpp"
#include "conetype/cone_types.hpp"
#include "conetype/surface_group.hpp"

namespace conetype::testing {

inline const SurfaceGroup& genus2() {
  static const SurfaceGroup g(Genus(2));
  return g;
}

inline const ConeTypeTable& table2() {
  static const ConeTypeTable t(genus2());
  return t;
}

inline const ConeMatrix& matrix2() {
  static const ConeMatrix m = build_matrix(table2());
  return m;
}

// Radius-6 ball, shared across a test binary.
inline const Ball& ball6() {
  static const Ball b = Ball::build(genus2(), 6);
  return b;
}

inline GroupElement el(const std::string& text) { return genus2().element(text); }
inline Word w(const std::string& text) { return genus2().parse(text); }

inline ConeTypeId type_of(const std::string& rep) {
  return *table2().id_of(w(rep));
}

// Uniform random word over the alphabet, not necessarily reduced.
inline Word random_word(const SurfaceGroup& g, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> d(0, g.generator_count() - 1);
  Word out;
  for (int i = 0; i < len; ++i) out.push_back(Generator(static_cast<std::uint8_t>(d(rng))));
  return out;
}

inline GroupElement random_element(const SurfaceGroup& g, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  return g.normal_form(random_word(g, rng, len(rng)));
}

}  // namespace conetype::testing

#endif  // CONETYPE_TESTS_TEST_SUPPORT_HPP_
