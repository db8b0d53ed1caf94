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

#include <algorithm>
#include <random>

#include "conetype/error.hpp"
#include "conetype/surface_group.hpp"
#include "test_support.hpp"

namespace conetype {
namespace {

using testing::ball6;
using testing::el;
using testing::genus2;
using testing::w;

std::string nf(const std::string& s) { return genus2().format(el(s)); }

TEST(FreeReduce, Examples) {
  const auto& g = genus2();
  EXPECT_TRUE(g.free_reduce(w("aA")).empty());
  EXPECT_EQ(g.format(g.free_reduce(w("abBa"))), "aa");
  EXPECT_EQ(g.format(g.free_reduce(w("abc"))), "abc");
  EXPECT_EQ(g.format(g.free_reduce(w("abcCBAd"))), "d");
  EXPECT_TRUE(g.is_freely_reduced(w("abc")));
  EXPECT_FALSE(g.is_freely_reduced(w("abBc")));
}

TEST(GeodesicWord, Examples) {
  const auto& g = genus2();
  EXPECT_TRUE(g.is_geodesic_word(w("abABAdc")));
  EXPECT_FALSE(g.is_geodesic_word(w("abABcdC")));
  EXPECT_FALSE(g.is_geodesic_word(w("aA")));
  EXPECT_TRUE(g.is_geodesic_word(Word{}));
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(el("baBAd"), el("cdC"));
  EXPECT_TRUE(el("abABcdCD").is_identity());
  EXPECT_EQ(nf("a"), "a");
  EXPECT_EQ(el("abABAdc").length(), 7);
  // Shortlex minimum of {abAB, dcDC}.
  EXPECT_EQ(nf("dcDC"), "abAB");
}

TEST(NormalForm, IsShortlexMinimumOfClass) {
  const auto& g = genus2();
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.size(); i += 37) {
    auto cls = g.geodesic_class(b.word(i));
    ASSERT_FALSE(cls.empty());
    EXPECT_EQ(cls.front(), b.word(i));
    for (const Word& u : cls) {
      EXPECT_TRUE(g.is_geodesic_word(u));
      EXPECT_EQ(g.normal_form(u).word(), b.word(i));
    }
    EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end(),
                               [&](const Word& x, const Word& y) { return g.alphabet().shortlex_less(x, y); }));
  }
}

TEST(NormalForm, Idempotent) {
  const auto& g = genus2();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Word u = testing::random_word(g, rng, 14);
    GroupElement x = g.normal_form(u);
    EXPECT_EQ(g.normal_form(x.word()), x);
    EXPECT_TRUE(g.is_geodesic(x.word()));
  }
}

TEST(GeodesicClass, Examples) {
  const auto& g = genus2();
  auto cls = g.geodesic_class(w("abABAdc"));
  std::vector<std::string> got;
  for (const Word& u : cls) got.push_back(g.format(u));
  std::sort(got.begin(), got.end());
  std::vector<std::string> expect{"abAABcd", "abABAdc", "dcDCAdc"};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
  EXPECT_EQ(g.geodesic_class(w("a")).size(), 1u);
  EXPECT_THROW(g.geodesic_class(w("aA")), DomainError);
}

// Exhaustive on the radius-6 ball: class sizes equal BFS geodesic counts.
TEST(GeodesicClass, MatchesBallPathCounts) {
  const auto& g = genus2();
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.size(); ++i) {
    ASSERT_EQ(g.geodesic_class(b.word(i)).size(), b.geodesic_count(i)) << g.format(b.word(i));
  }
}

// Dehn criterion against BFS: every word of the radius-6 geodesic DAG is
// geodesic by the criterion, and freely reduced non-geodesic words fail it.
TEST(GeodesicWord, AgreesWithBfsDistance) {
  const auto& g = genus2();
  const Ball& b = ball6();
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    Word u = testing::random_word(g, rng, 6);
    if (!g.is_freely_reduced(u)) continue;
    auto idx = b.find(g.normal_form(u));
    ASSERT_TRUE(idx.has_value());
    bool geodesic = b.distance(*idx) == static_cast<int>(u.size());
    EXPECT_EQ(g.is_geodesic_word(u), geodesic) << g.format(u);
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(Distance, Examples) {
  const auto& g = genus2();
  EXPECT_EQ(g.distance(g.identity(), el("a")), 1);
  EXPECT_EQ(g.distance(g.identity(), el("abABAdc")), 7);
  EXPECT_EQ(g.distance(g.identity(), el("abAB")), 4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    GroupElement x = testing::random_element(g, rng, 10);
    EXPECT_EQ(g.distance(x, x), 0);
  }
}

TEST(Distance, MetricProperties) {
  const auto& g = genus2();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    GroupElement x = testing::random_element(g, rng, 8);
    GroupElement y = testing::random_element(g, rng, 8);
    GroupElement z = testing::random_element(g, rng, 8);
    EXPECT_LE(g.distance(x, z), g.distance(x, y) + g.distance(y, z));
    EXPECT_EQ(g.distance(g.multiply(z, x), g.multiply(z, y)), g.distance(x, y));
    EXPECT_EQ(g.distance(x, y), g.distance(y, x));
  }
}

TEST(GroupLaws, RandomSample) {
  const auto& g = genus2();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    GroupElement x = testing::random_element(g, rng, 8);
    GroupElement y = testing::random_element(g, rng, 8);
    GroupElement z = testing::random_element(g, rng, 8);
    EXPECT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
    EXPECT_TRUE(g.multiply(x, g.inverse(x)).is_identity());
    EXPECT_EQ(g.multiply(x, g.identity()), x);
  }
}

TEST(LastLetters, MaskMatchesClass) {
  const auto& g = genus2();
  const Ball& b = ball6();
  for (std::size_t i = 1; i < b.size(); i += 13) {
    GeneratorMask m = 0;
    for (const Word& u : g.geodesic_class(b.word(i))) m |= GeneratorMask{1} << u.back().index;
    EXPECT_EQ(b.last_letters(i), m);
    GroupElement x = g.normal_form(b.word(i));
    EXPECT_EQ(g.last_letter_mask(x), m);
    for (Generator a : g.alphabet().ordered()) {
      EXPECT_EQ(g.extends(x, a), g.multiply(x, a).length() == x.length() + 1);
    }
  }
}

TEST(HigherGenus, RelatorAndPieces) {
  SurfaceGroup g{Genus(3)};
  EXPECT_TRUE(g.normal_form(g.alphabet().relator()).is_identity());
  Word half = g.alphabet().relator().subword(0, 6);
  EXPECT_EQ(g.normal_form(half).length(), 6);
  EXPECT_EQ(g.geodesic_class(g.normal_form(half)).size(), 2u);
  Word seven = g.alphabet().relator().subword(0, 7);
  EXPECT_FALSE(g.is_geodesic_word(seven));
  EXPECT_EQ(g.normal_form(seven).length(), 5);
}

}  // namespace
}  // namespace conetype
