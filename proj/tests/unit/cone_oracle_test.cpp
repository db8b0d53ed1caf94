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
#include <set>

#include "conetype/cone_oracle.hpp"
#include "conetype/error.hpp"
#include "test_support.hpp"

namespace conetype {
namespace {

using testing::ball6;
using testing::el;
using testing::genus2;
using testing::w;

const ConeOracle& oracle4() {
  static const ConeOracle o(genus2(), 4);
  return o;
}

TEST(ConeMembership, Examples) {
  const auto& g = genus2();
  EXPECT_TRUE(cone_membership(g, el("a"), el("BAd")));
  EXPECT_FALSE(cone_membership(g, el("ba"), el("BAd")));
  EXPECT_TRUE(cone_membership(g, el("abABAdc"), g.identity()));
  EXPECT_TRUE(cone_membership(g, g.identity(), el("abABAdc")));
}

TEST(Fingerprint, Examples) {
  const ConeOracle& o = oracle4();
  EXPECT_EQ(o.fingerprint(el("bc")), o.fingerprint(el("c")));
  EXPECT_EQ(o.fingerprint(el("aba")), o.fingerprint(el("ba")));
  EXPECT_NE(o.fingerprint(el("a")), o.fingerprint(el("ba")));
  // The cone of the identity is everything.
  EXPECT_EQ(o.fingerprint(genus2().identity()).members.size(), o.ball().size());
}

TEST(Fingerprint, MembersAreTheConeWithinDepth) {
  const auto& g = genus2();
  const ConeOracle& o = oracle4();
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    GroupElement x = testing::random_element(g, rng, 6);
    auto members = o.members(o.fingerprint(x));
    std::set<Word> got;
    for (const auto& z : members) got.insert(z.word());
    std::set<Word> expect;
    for (std::size_t i = 0; i < o.ball().size(); ++i) {
      GroupElement z = g.normal_form(o.ball().word(i));
      if (cone_membership(g, x, z)) expect.insert(z.word());
    }
    EXPECT_EQ(got, expect) << g.format(x);
  }
}

// For |x| <= 4: {x z in cone, |z| <= 2} is the set of elements of the
// radius-(|x|+2) ball having a geodesic through x.
TEST(ConeMembership, AgreesWithGeodesicDag) {
  const auto& g = genus2();
  const Ball& b = ball6();
  std::vector<std::vector<std::size_t>> through(b.size());
  for (std::size_t x = 0; x < b.sphere_end(4); x += 29) {
    std::vector<char> mark(b.size(), 0);
    mark[x] = 1;
    int dx = b.distance(x);
    for (std::size_t i = b.sphere_begin(dx + 1); i < b.sphere_end(dx + 2); ++i) {
      for (const Predecessor& p : b.predecessors(i)) {
        if (mark[p.node]) mark[i] = 1;
      }
    }
    GroupElement ex = g.normal_form(b.word(x));
    for (std::size_t i = b.sphere_begin(dx); i < b.sphere_end(dx + 2); ++i) {
      GroupElement z = g.multiply(g.inverse(ex), g.normal_form(b.word(i)));
      if (z.length() > 2) continue;
      EXPECT_EQ(cone_membership(g, ex, z), mark[i] != 0) << g.format(ex) << " " << g.format(z);
    }
  }
}

TEST(EnumerateGeodesics, Examples) {
  const auto& g = genus2();
  EXPECT_EQ(enumerate_geodesics(g, el("abABAdc")).size(), 3u);
  EXPECT_EQ(enumerate_geodesics(g, el("a")).size(), 1u);
  EXPECT_EQ(enumerate_geodesics(g, el("abAB")).size(), 2u);
  EXPECT_EQ(enumerate_geodesics(g, g.identity()).size(), 1u);
}

TEST(EnumerateGeodesics, AgreesWithGeodesicClass) {
  const auto& g = genus2();
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.size(); i += 17) {
    GroupElement y = g.normal_form(b.word(i));
    EXPECT_EQ(enumerate_geodesics(g, y), g.geodesic_class(y));
  }
}

TEST(Quadruples, Examples) {
  const auto& g = genus2();
  auto occ = quadruple_occurrences(g, el("abABAdc"));
  auto has = [&](const char* word, std::size_t pos, const char* q) {
    return std::find(occ.begin(), occ.end(), QuadrupleOccurrence{w(word), pos, w(q)}) != occ.end();
  };
  EXPECT_TRUE(has("abABAdc", 1, "abAB"));
  EXPECT_TRUE(has("abABAdc", 4, "BAdc"));
  int on_twin = 0;
  for (const auto& o : occ) on_twin += o.word == w("dcDCAdc");
  EXPECT_EQ(on_twin, 1);
  EXPECT_TRUE(has("dcDCAdc", 1, "dcDC"));
  EXPECT_TRUE(quadruple_occurrences(g, el("abc")).empty());
}

TEST(Quadruples, EmptyIffUniqueGeodesic) {
  const auto& g = genus2();
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.size(); i += 11) {
    GroupElement y = g.normal_form(b.word(i));
    EXPECT_EQ(quadruple_occurrences(g, y).empty(), b.geodesic_count(i) == 1) << g.format(y);
  }
}

}  // namespace
}  // namespace conetype
