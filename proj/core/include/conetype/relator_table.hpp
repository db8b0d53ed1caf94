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

#ifndef CONETYPE_RELATOR_TABLE_HPP_
#define CONETYPE_RELATOR_TABLE_HPP_

#include <array>
#include <optional>
#include <vector>

#include "conetype/alphabet.hpp"

namespace conetype {

// Cyclic permutations of the relator and of its inverse.
//
// Every generator occurs exactly once in the relator, so the successor of
// a letter inside a permutation is a function of the letter and of the
// direction (0 = relator, 1 = inverse relator). A word is a *piece* when
// it reads along one of the two cycles; its length is then at most 4g.
class RelatorTable {
 public:
  explicit RelatorTable(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  int relator_length() const noexcept { return n_; }
  int half_length() const noexcept { return n_ / 2; }

  // 8g words: the 4g rotations of the relator, then those of its inverse.
  const std::vector<Word>& permutations() const noexcept { return perms_; }

  Generator next(int direction, Generator x) const { return next_[direction][x.index]; }

  // Direction in which w reads as a piece (0 preferred), if any. Empty
  // words and words longer than 4g are not pieces.
  std::optional<int> piece_direction(const Word& w) const;
  bool is_piece(const Word& w) const { return piece_direction(w).has_value(); }

  // Membership in R: nonempty pieces of length at most 2g.
  bool contains(const Word& w) const;

  // For a piece w of direction d, the remaining 4g - |w| letters of the
  // permutation starting with w.
  Word complement(const Word& w) const;
  // The word equal to w in the group obtained from the relator: the
  // inverse of the complement.
  Word relator_replacement(const Word& w) const { return alphabet_->inverse(complement(w)); }

  // Requires contains(q) and |q| == 2g; throws DomainError otherwise.
  Word twin(const Word& q) const;

  // The piece of length len starting with x and reading in `direction`.
  Word piece(Generator x, int direction, int len) const;

  // Runs of the two cycles inside w: run[d][i] is the length of the longest
  // piece of direction d starting at position i (capped at 4g).
  void runs(const Word& w, std::array<std::vector<int>, 2>& run) const;

 private:
  const Alphabet* alphabet_;
  int n_;
  std::vector<Word> perms_;
  std::array<std::vector<Generator>, 2> next_;
};

}  // namespace conetype

#endif  // CONETYPE_RELATOR_TABLE_HPP_
