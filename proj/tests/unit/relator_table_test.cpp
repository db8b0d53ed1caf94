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

#include <set>

#include "conetype/error.hpp"
#include "conetype/relator_table.hpp"
#include "conetype/surface_group.hpp"
#include "test_support.hpp"

namespace conetype {
namespace {

using testing::el;
using testing::genus2;
using testing::w;

TEST(RelatorTable, PermutationsEvaluateToIdentity) {
  for (int g = 2; g <= 4; ++g) {
    SurfaceGroup grp{Genus(g)};
    const auto& perms = grp.relators().permutations();
    EXPECT_EQ(perms.size(), static_cast<std::size_t>(8 * g));
    for (const Word& p : perms) {
      EXPECT_EQ(p.size(), static_cast<std::size_t>(4 * g));
      EXPECT_TRUE(grp.normal_form(p).is_identity()) << grp.format(p);
    }
  }
}

TEST(RelatorTable, MembershipExamples) {
  const auto& g = genus2();
  EXPECT_TRUE(g.is_in_R(w("bABc")));
  EXPECT_FALSE(g.is_in_R(w("bABa")));
  EXPECT_FALSE(g.is_in_R(Word{}));
  EXPECT_TRUE(g.is_in_R(w("a")));
  EXPECT_TRUE(g.is_in_R(w("DCba")));
  // Longer than half the relator: never in R, even inside a permutation.
  EXPECT_FALSE(g.is_in_R(w("abABc")));
}

TEST(RelatorTable, LengthCounts) {
  for (int g = 2; g <= 4; ++g) {
    SurfaceGroup grp{Genus(g)};
    std::vector<std::set<Word>> by_len(2 * g + 1);
    for (const Word& p : grp.relators().permutations()) {
      for (int len = 1; len <= 2 * g; ++len) by_len[len].insert(p.subword(0, len));
    }
    // Twin quadruples are distinct words but share a cone type, so R has
    // 4g more words than there are cone types.
    int total = 0;
    for (int len = 1; len <= 2 * g; ++len) {
      int expect = len == 1 ? 4 * g : 8 * g;
      EXPECT_EQ(static_cast<int>(by_len[len].size()), expect) << "g=" << g << " len=" << len;
      total += static_cast<int>(by_len[len].size());
      for (const Word& q : by_len[len]) EXPECT_TRUE(grp.is_in_R(q));
    }
    EXPECT_EQ(total, Genus(g).cone_type_count() + 4 * g);
  }
}

TEST(RelatorTable, TwinExamples) {
  const auto& g = genus2();
  EXPECT_EQ(g.format(g.twin(w("abAB"))), "dcDC");
  EXPECT_EQ(g.format(g.twin(w("BAdc"))), "ABcd");
  EXPECT_THROW(g.twin(w("abA")), DomainError);
  EXPECT_THROW(g.twin(w("bABa")), DomainError);
}

TEST(RelatorTable, TwinIsInvolutionOnQuadruples) {
  for (int gg = 2; gg <= 3; ++gg) {
    SurfaceGroup g{Genus(gg)};
    for (const Word& p : g.relators().permutations()) {
      Word q = p.subword(0, 2 * gg);
      Word t = g.twin(q);
      EXPECT_NE(t, q);
      EXPECT_TRUE(g.is_in_R(t));
      EXPECT_EQ(g.twin(t), q);
      EXPECT_EQ(g.normal_form(q), g.normal_form(t));
      EXPECT_TRUE(g.is_geodesic_word(q));
    }
  }
}

TEST(RelatorTable, ComplementCompletesTheCycle) {
  const auto& g = genus2();
  const auto& rt = g.relators();
  for (const Word& p : rt.permutations()) {
    for (std::size_t len = 1; len < 8; ++len) {
      Word u = p.subword(0, len);
      Word c = rt.complement(u);
      EXPECT_EQ(u.size() + c.size(), 8u);
      EXPECT_TRUE(g.normal_form(u + c).is_identity());
      EXPECT_EQ(g.normal_form(u), g.normal_form(rt.relator_replacement(u)));
    }
  }
  EXPECT_THROW(rt.complement(w("aa")), DomainError);
}

}  // namespace
}  // namespace conetype
