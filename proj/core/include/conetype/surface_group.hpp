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

#ifndef CONETYPE_SURFACE_GROUP_HPP_
#define CONETYPE_SURFACE_GROUP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conetype/alphabet.hpp"
#include "conetype/relator_table.hpp"

namespace conetype {

class SurfaceGroup;

// An element of the group, held as its shortlex-least geodesic word.
// Only SurfaceGroup can create one, so the word is always canonical.
class GroupElement {
 public:
  GroupElement() = default;  // identity

  const Word& word() const noexcept { return nf_; }
  int length() const noexcept { return static_cast<int>(nf_.size()); }
  bool is_identity() const noexcept { return nf_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  friend class SurfaceGroup;
  explicit GroupElement(Word nf) : nf_(std::move(nf)) {}
  Word nf_;
};

// Set of generators as a bitmask indexed by Generator::index.
using GeneratorMask = std::uint64_t;

inline bool mask_has(GeneratorMask m, Generator x) { return (m >> x.index) & 1u; }

// Summary of a geodesic word: its element, and the last letters of all
// geodesics of that element.
struct GeodesicInfo {
  Word normal_form;
  GeneratorMask last_letters = 0;
  std::size_t class_size = 0;
};

// The fundamental group of the closed genus-g surface with its standard
// one-relator presentation. Immutable; all member functions are const.
class SurfaceGroup {
 public:
  explicit SurfaceGroup(Genus genus);
  SurfaceGroup(const SurfaceGroup&) = delete;
  SurfaceGroup& operator=(const SurfaceGroup&) = delete;

  Genus genus() const noexcept { return alphabet_->genus(); }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const RelatorTable& relators() const noexcept { return *relators_; }
  int generator_count() const noexcept { return alphabet_->size(); }

  Word parse(std::string_view text) const { return alphabet_->parse(text); }
  std::string format(const Word& w) const { return alphabet_->format(w); }
  std::string format(const GroupElement& x) const { return format(x.word()); }

  Word free_reduce(const Word& w) const;
  bool is_freely_reduced(const Word& w) const;

  // Longest relator piece of length > 2g, leftmost first: (position,
  // length). Pieces are capped at 4g.
  std::optional<std::pair<std::size_t, std::size_t>> find_long_piece(const Word& w) const;

  // Dehn criterion: freely reduced and free of relator pieces longer than
  // half the relator.
  bool is_geodesic_word(const Word& w) const;
  // Exact test: |w| equals the length of its element. Slower; explores the
  // twin-swap class of w.
  bool is_geodesic(const Word& w) const;

  bool is_in_R(const Word& w) const { return relators_->contains(w); }
  Word twin(const Word& q) const { return relators_->twin(q); }

  GroupElement normal_form(const Word& w) const;
  GroupElement element(std::string_view text) const { return normal_form(parse(text)); }
  GroupElement identity() const { return {}; }
  GroupElement generator(Generator x) const { return GroupElement(Word{x.index}); }

  // All geodesic words of the element of w, in shortlex order. Throws
  // DomainError unless w is geodesic.
  std::vector<Word> geodesic_class(const Word& w) const;
  // Same, for an element.
  std::vector<Word> geodesic_class(const GroupElement& x) const {
    return geodesic_class(x.word());
  }

  // Precondition: w is geodesic (checked only in debug builds).
  GeodesicInfo analyze_geodesic(const Word& w) const;
  GeneratorMask last_letter_mask(const GroupElement& x) const;
  // True when x·a is one letter longer than x.
  bool extends(const GroupElement& x, Generator a) const {
    return !mask_has(last_letter_mask(x), alphabet_->inverse(a));
  }

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement multiply(const GroupElement& x, Generator a) const;
  GroupElement inverse(const GroupElement& x) const;
  int distance(const GroupElement& x, const GroupElement& y) const;

 private:
  // Shortens a reducible word by one free cancellation or one relator
  // replacement; returns false if w is already Dehn-reduced.
  bool reduce_once(Word& w) const;
  bool is_reducible(const Word& w) const;
  // Visits the twin-swap class of w. Stops early and returns the member if
  // one is reducible.
  std::optional<Word> explore_class(const Word& w, std::vector<Word>& out) const;

  std::unique_ptr<Alphabet> alphabet_;
  std::unique_ptr<RelatorTable> relators_;
};

}  // namespace conetype

template <>
struct std::hash<conetype::GroupElement> {
  std::size_t operator()(const conetype::GroupElement& x) const noexcept {
    return std::hash<conetype::Word>{}(x.word());
  }
};

#endif  // CONETYPE_SURFACE_GROUP_HPP_
