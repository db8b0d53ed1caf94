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

#include <gtest/gtest.h>

#include <random>

#include "conetype/hyperbolic_model.hpp"
#include "test_support.hpp"

namespace conetype {
namespace {

using testing::ball6;
using testing::genus2;

TEST(FuchsianModel, RelatorIsTrivial) {
  for (int g = 2; g <= 4; ++g) {
    Alphabet a{Genus(g)};
    FuchsianModel m(a);
    EXPECT_LT(m.relator_defect(), 1e-12L) << "g=" << g;
    EXPECT_GT(m.inradius(), 0.1L);
    for (int i = 0; i < a.size(); ++i) {
      Generator x(static_cast<std::uint8_t>(i));
      Mobius p = m.generator(x) * m.generator(a.inverse(x));
      EXPECT_LT(std::abs(p.alpha - Complex(1, 0)) + std::abs(p.beta), 1e-15L);
    }
  }
}

// Independent check on the rewriting: distinct normal forms in the ball go
// to distinct orbit points, and every geodesic of an element lands on the
// same point.
TEST(FuchsianModel, SeparatesBallElements) {
  const auto& g = genus2();
  FuchsianModel m(g.alphabet());
  OrbitIndex index(m.inradius());
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto [pos, inserted] = index.insert(m.orbit_point(b.word(i)));
    ASSERT_TRUE(inserted) << g.format(b.word(i)) << " collides with entry " << pos;
  }
  EXPECT_EQ(index.size(), b.size());
  for (std::size_t i = 0; i < b.size(); i += 101) {
    for (const Word& u : g.geodesic_class(b.word(i))) {
      EXPECT_EQ(index.find(m.orbit_point(u)), static_cast<std::int64_t>(i));
    }
  }
}

TEST(FuchsianModel, RandomWordsAgreeWithNormalForm) {
  const auto& g = genus2();
  FuchsianModel m(g.alphabet());
  std::mt19937_64 rng(17);
  // Freely reduced words of length <= 10 keep the orbit within about 30 units
  // of the origin, where long double still resolves points.
  for (int i = 0; i < 3000; ++i) {
    Word u = g.free_reduce(testing::random_word(g, rng, 10));
    DiskPoint p = m.orbit_point(u);
    DiskPoint q = m.orbit_point(g.normal_form(u).word());
    EXPECT_LT(hyperbolic_distance(p, q), 1e-6L) << g.format(u);
  }
}

TEST(FuchsianModel, Genus3Faithful) {
  SurfaceGroup g{Genus(3)};
  FuchsianModel m(g.alphabet());
  Ball b = Ball::build(g, 3);
  OrbitIndex index(m.inradius());
  for (std::size_t i = 0; i < b.size(); ++i) {
    ASSERT_TRUE(index.insert(m.orbit_point(b.word(i))).second) << g.format(b.word(i));
  }
}

}  // namespace
}  // namespace conetype
