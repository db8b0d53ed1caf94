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
#include <set>

#include <nlohmann/json.hpp>

#include "conetype/error.hpp"
#include "test_support.hpp"

namespace conetype {
namespace {

using testing::ball6;
using testing::el;
using testing::genus2;
using testing::table2;
using testing::type_of;
using testing::w;

const char* const kReps[] = {
    "B",    "a",    "d",    "C",    "D",    "c",    "b",    "A",    "Bc",   "BA",
    "ab",   "aB",   "dC",   "dc",   "CD",   "Cb",   "Da",   "DC",   "cd",   "cD",
    "bA",   "ba",   "AB",   "Ad",   "Bcd",  "BAd",  "abA",  "aBA",  "dCD",  "dcD",
    "CDa",  "Cba",  "Dab",  "DCb",  "cdC",  "cDC",  "bAB",  "baB",  "ABc",  "Adc",
    "BcdC", "abAB", "dCDa", "CDab", "DabA", "cdCD", "bABc", "ABcd"};

const OracleClassifier& oracle_classifier() {
  static const OracleClassifier o(table2());
  return o;
}

TEST(ConeTypeTable, Genus2Representatives) {
  const auto& t = table2();
  ASSERT_EQ(t.size(), 48);
  for (int i = 0; i < 48; ++i) {
    EXPECT_EQ(genus2().format(t.representative(i + 1)), kReps[i]) << "id " << i + 1;
    EXPECT_EQ(t.id_of(w(kReps[i])), i + 1);
    EXPECT_TRUE(genus2().is_in_R(t.representative(i + 1)));
  }
  EXPECT_EQ(t.class_offsets(), (std::vector<ConeTypeId>{1, 9, 25, 41, 49}));
  EXPECT_EQ(t.length_class(0), 0);
  EXPECT_EQ(t.length_class(26), 3);
  // The twin of a quadruple also names its type.
  EXPECT_EQ(t.id_of(w("dcDC")), t.id_of(w("abAB")));
}

TEST(ConeTypeTable, CountsForHigherGenus) {
  for (int g = 3; g <= 5; ++g) {
    SurfaceGroup grp{Genus(g)};
    ConeTypeTable t(grp, CascadeMode::experimental);
    EXPECT_EQ(t.size(), 8 * g * (2 * g - 1));
    std::vector<int> per_len(2 * g + 1, 0);
    for (const Word& r : t.representatives()) ++per_len.at(r.size());
    for (int len = 1; len <= 2 * g; ++len) {
      EXPECT_EQ(per_len[len], (len == 1 || len == 2 * g) ? 4 * g : 8 * g);
    }
    EXPECT_FALSE(ConeTypeTable(grp).cascade_available());
    EXPECT_TRUE(t.cascade_available());
  }
}

TEST(Successor, Examples) {
  const auto& t = table2();
  const auto& al = genus2().alphabet();
  auto gen = [&](const char* s) { return al.parse(s)[0]; };
  EXPECT_EQ(t.successor(type_of("ab"), gen("a")), type_of("ba"));
  EXPECT_EQ(t.successor(t.id_of(w("abAB")).value(), gen("A")), type_of("BA"));
  EXPECT_EQ(t.successor(t.id_of(w("abAB")).value(), gen("D")), type_of("CD"));
  EXPECT_EQ(t.successor(type_of("abA"), gen("d")), type_of("Ad"));
  EXPECT_FALSE(t.successor(type_of("ab"), gen("B")).has_value());
  for (Generator a : al.ordered()) EXPECT_EQ(t.successor(0, a), t.id_of(Word{a.index}));
}

TEST(Successor, DegreesAndInjectivity) {
  const auto& t = table2();
  EXPECT_EQ(t.out_degree(0), 8);
  for (ConeTypeId c = 1; c <= t.size(); ++c) {
    EXPECT_EQ(t.out_degree(c), c <= 40 ? 7 : 6) << c;
    std::set<ConeTypeId> targets;
    for (Generator a : genus2().alphabet().ordered()) {
      if (auto s = t.successor(c, a)) {
        EXPECT_TRUE(targets.insert(*s).second) << "type " << c << " repeats a target";
        int from = t.length_class(c), to = t.length_class(*s);
        if (from == 3) {
          EXPECT_NE(to, 3);
        }
        if (from == 4) {
          EXPECT_LE(to, 2);
        }
        EXPECT_LE(to, from + 1);
      }
    }
  }
}

TEST(Successor, DefinedIffLetterInCone) {
  const auto& g = genus2();
  const auto& t = table2();
  for (ConeTypeId c = 1; c <= t.size(); ++c) {
    GroupElement x = g.normal_form(t.representative(c));
    for (Generator a : g.alphabet().ordered()) {
      EXPECT_EQ(t.successor(c, a).has_value(), g.extends(x, a)) << c;
    }
  }
}

TEST(Classify, Examples) {
  const auto& t = table2();
  EXPECT_EQ(t.classify(genus2().identity()), 0);
  EXPECT_EQ(t.classify(el("abcd")), type_of("cd"));
  EXPECT_EQ(t.classify(el("dcDCAdc")), type_of("BAdc"));
  EXPECT_EQ(t.classify(el("bc")), type_of("c"));
  EXPECT_EQ(t.classify(el("aba")), type_of("ba"));
  EXPECT_EQ(t.classify(el("baBAd")), t.classify(el("cdC")));
  EXPECT_EQ(t.classify(el("cdC")), type_of("cdC"));
  for (ConeTypeId c = 1; c <= t.size(); ++c) {
    EXPECT_EQ(t.classify(genus2().normal_form(t.representative(c))), c);
  }
}

TEST(OracleClassifier, RepresentativesAreSeparatedAtDepth4) {
  const auto& o = oracle_classifier();
  EXPECT_EQ(o.depth(), 4);
  std::set<Fingerprint> fps;
  for (ConeTypeId c = 0; c <= table2().size(); ++c) fps.insert(o.representative_fingerprint(c));
  EXPECT_EQ(fps.size(), 49u);
  EXPECT_EQ(o.classify(el("a")), type_of("a"));
  EXPECT_EQ(o.classify(el("baBAd")), type_of("cdC"));
}

TEST(OracleClassifier, AgreesWithCascadeOnBall) {
  const auto& g = genus2();
  const auto& t = table2();
  const auto& o = oracle_classifier();
  Ball b = Ball::build(g, 4);
  for (std::size_t i = 0; i < b.size(); ++i) {
    GroupElement x = g.normal_form(b.word(i));
    ASSERT_EQ(t.classify(x), o.classify(x)) << g.format(x);
  }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    GroupElement x = testing::random_element(g, rng, 9);
    ASSERT_EQ(t.classify(x), o.classify(x)) << g.format(x);
  }
}

TEST(Classify, SuccessorIsCompatibleWithMultiplication) {
  const auto& g = genus2();
  const auto& t = table2();
  const Ball& b = ball6();
  for (std::size_t i = 0; i < b.sphere_end(5); i += 5) {
    GroupElement x = g.normal_form(b.word(i));
    ConeTypeId c = t.classify(x);
    for (Generator a : g.alphabet().ordered()) {
      auto s = t.successor(c, a);
      ASSERT_EQ(s.has_value(), g.extends(x, a));
      if (s) {
        ASSERT_EQ(*s, t.classify(g.multiply(x, a)));
      }
    }
  }
}

// Sphere class sizes by type equal the automaton prediction.
TEST(Classify, SphereTypeCountsMatchAutomaton) {
  const auto& g = genus2();
  const auto& t = table2();
  const Ball& b = ball6();
  auto rows = growth_counts(t, testing::matrix2(), 6);
  for (int n = 1; n <= 6; ++n) {
    std::vector<mpz_class> counts(t.size() + 1, 0);
    for (std::size_t i = b.sphere_begin(n); i < b.sphere_end(n); ++i) {
      counts[t.classify(g.normal_form(b.word(i)))] += 1;
    }
    for (ConeTypeId c = 1; c <= t.size(); ++c) {
      ASSERT_EQ(counts[c], rows[n].per_type[c - 1]) << "n=" << n << " type " << c;
    }
  }
}

TEST(ConeTypeTable, ExperimentalCascadeMatchesOracleForGenus3) {
  SurfaceGroup g{Genus(3)};
  ConeTypeTable t(g, CascadeMode::experimental);
  OracleClassifier o(t, 4, 7, BallOptions{});
  Ball b = Ball::build(g, 3);
  int mismatches = 0;
  // Whole radius-2 ball, then every 8th element of the 3-sphere.
  for (std::size_t i = 0; i < b.size(); i += i < b.sphere_begin(3) ? 1 : 8) {
    GroupElement x = g.normal_form(b.word(i));
    mismatches += t.classify(x) != o.classify(x);
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(ConeTypeTable, JsonExport) {
  auto j = table2().to_json();
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["types"].size(), 49u);
  EXPECT_EQ(j["types"][2]["representative"], "a");
  EXPECT_EQ(j["types"][11]["successors"]["a"], 22);
  EXPECT_TRUE(j["types"][11]["successors"]["B"].is_null());
}

}  // namespace
}  // namespace conetype
