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

#include "conetype/alphabet.hpp"
#include "conetype/error.hpp"

namespace conetype {
namespace {

TEST(Genus, Sizes) {
  Genus g(3);
  EXPECT_EQ(g.alphabet_size(), 12);
  EXPECT_EQ(g.relator_length(), 12);
  EXPECT_EQ(g.half_relator_length(), 6);
  EXPECT_EQ(Genus(2).cone_type_count(), 48);
  EXPECT_EQ(g.cone_type_count(), 120);
  EXPECT_THROW(Genus(1), DomainError);
  EXPECT_THROW(Genus(16), DomainError);
}

TEST(Alphabet, InverseIsFixedPointFreeInvolution) {
  for (int g = 2; g <= 5; ++g) {
    Alphabet a{Genus(g)};
    for (int i = 0; i < a.size(); ++i) {
      Generator x(static_cast<std::uint8_t>(i));
      EXPECT_NE(a.inverse(x), x);
      EXPECT_EQ(a.inverse(a.inverse(x)), x);
    }
  }
}

TEST(Alphabet, Genus2Order) {
  Alphabet a{Genus(2)};
  std::string order;
  for (Generator x : a.ordered()) order += a.format(x);
  EXPECT_EQ(order, "BadCDcbA");
  EXPECT_TRUE(a.less(a.parse("B")[0], a.parse("a")[0]));
  EXPECT_TRUE(a.less(a.parse("b")[0], a.parse("A")[0]));
}

TEST(Alphabet, OrderIsAPermutation) {
  for (int g = 2; g <= 6; ++g) {
    Alphabet a{Genus(g)};
    std::vector<int> seen(a.size(), 0);
    for (Generator x : a.ordered()) ++seen[x.index];
    for (int c : seen) EXPECT_EQ(c, 1);
    for (int r = 0; r < a.size(); ++r) EXPECT_EQ(a.rank(a.ordered()[r]), r);
  }
}

TEST(Alphabet, Relator) {
  Alphabet a{Genus(2)};
  EXPECT_EQ(a.format(a.relator()), "abABcdCD");
  Alphabet b{Genus(3)};
  EXPECT_EQ(b.relator().size(), 12u);
  EXPECT_EQ(b.format(b.relator()), "a1b1a1'b1'a2b2a2'b2'a3b3a3'b3'");
}

TEST(Alphabet, ParseFormatRoundTrip) {
  Alphabet a{Genus(2)};
  for (std::string s : {"", "a", "abABcdCD", "DCba"}) EXPECT_EQ(a.format(a.parse(s)), s);
  EXPECT_EQ(a.format(a.parse("a b . A * B")), "abAB");
  Alphabet b{Genus(4)};
  Word x = b.parse("a1 b4' a3 b2'");
  EXPECT_EQ(x.size(), 4u);
  EXPECT_EQ(b.parse(b.format(x)), x);
}

TEST(Alphabet, ParseErrorsCarryPositions) {
  Alphabet a{Genus(2)};
  try {
    a.parse("abxd");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(a.parse("ae"), ParseError);
  Alphabet b{Genus(3)};
  EXPECT_THROW(b.parse("a4"), ParseError);
  EXPECT_THROW(b.parse("c1"), ParseError);
  EXPECT_THROW(b.parse("a"), ParseError);
}

TEST(Alphabet, Shortlex) {
  Alphabet a{Genus(2)};
  auto lt = [&](const char* u, const char* v) { return a.shortlex_less(a.parse(u), a.parse(v)); };
  EXPECT_TRUE(lt("A", "Ba"));
  EXPECT_TRUE(lt("Ba", "aB"));
  EXPECT_FALSE(lt("aB", "aB"));
  EXPECT_TRUE(lt("", "A"));
  EXPECT_TRUE(lt("dA", "bA"));
}

}  // namespace
}  // namespace conetype
