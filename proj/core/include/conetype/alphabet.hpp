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

#ifndef CONETYPE_ALPHABET_HPP_
#define CONETYPE_ALPHABET_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "conetype/word.hpp"

namespace conetype {

// Genus g >= 2 of the closed orientable surface.
class Genus {
 public:
  explicit Genus(int g);

  int value() const noexcept { return g_; }
  int alphabet_size() const noexcept { return 4 * g_; }
  int relator_length() const noexcept { return 4 * g_; }
  int half_relator_length() const noexcept { return 2 * g_; }
  // 8g(2g - 1): number of cone types other than the identity's.
  int cone_type_count() const noexcept { return 8 * g_ * (2 * g_ - 1); }

  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

// The symmetric generating set of the surface group of genus g.
//
// Generator 2i is a_{i+1}, generator 2i+1 is b_{i+1}, and generator
// k + 2g is the inverse of generator k. For genus 2 the letters are
// a, b, c, d with inverses A, B, C, D; for higher genus they print as
// a1, b1, ..., ag, bg with a trailing apostrophe marking inverses.
//
// The total order on generators is the cyclic order of edges around a
// vertex of the Cayley graph read from b_1^{-1}; for genus 2 this is
// B < a < d < C < D < c < b < A.
class Alphabet {
 public:
  explicit Alphabet(Genus genus);

  Genus genus() const noexcept { return genus_; }
  int size() const noexcept { return genus_.alphabet_size(); }

  Generator inverse(Generator x) const {
    return Generator((x.index + 2 * genus_.value()) % size());
  }
  Word inverse(const Word& w) const;

  // Position of x in the total order.
  int rank(Generator x) const { return rank_[x.index]; }
  // Generators in increasing order.
  const std::vector<Generator>& ordered() const noexcept { return ordered_; }
  bool less(Generator x, Generator y) const { return rank(x) < rank(y); }
  // Shortlex: shorter first, then lexicographic w.r.t. the generator order.
  bool shortlex_less(const Word& u, const Word& v) const;

  // The relator [a1,b1]...[ag,bg].
  const Word& relator() const noexcept { return relator_; }

  std::string format(Generator x) const;
  std::string format(const Word& w) const;
  // Throws ParseError naming the offending character offset.
  Word parse(std::string_view text) const;

 private:
  Genus genus_;
  Word relator_;
  std::vector<Generator> ordered_;
  std::vector<int> rank_;
};

}  // namespace conetype

#endif  // CONETYPE_ALPHABET_HPP_
