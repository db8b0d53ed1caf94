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

#include "conetype/surface_group.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <unordered_set>

#include "conetype/error.hpp"

namespace conetype {

namespace {

// Membership set that stays a flat vector while small.
class WordSet {
 public:
  explicit WordSet(std::vector<Word>& items) : items_(items) {}

  bool insert(const Word& w) {
    if (hashed_.empty()) {
      if (std::find(items_.begin(), items_.end(), w) != items_.end()) return false;
      items_.push_back(w);
      if (items_.size() > 32) hashed_.insert(items_.begin(), items_.end());
      return true;
    }
    if (!hashed_.insert(w).second) return false;
    items_.push_back(w);
    return true;
  }

 private:
  std::vector<Word>& items_;
  std::unordered_set<Word> hashed_;
};

}  // namespace

SurfaceGroup::SurfaceGroup(Genus genus)
    : alphabet_(std::make_unique<Alphabet>(genus)),
      relators_(std::make_unique<RelatorTable>(*alphabet_)) {}

Word SurfaceGroup::free_reduce(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!out.empty() && out.back() == alphabet_->inverse(w[i])) {
      out.pop_back();
    } else {
      out.push_back(w[i]);
    }
  }
  return out;
}

bool SurfaceGroup::is_freely_reduced(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == alphabet_->inverse(w[i])) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> SurfaceGroup::find_long_piece(
    const Word& w) const {
  const int half = relators_->half_length();
  if (static_cast<int>(w.size()) <= half) return std::nullopt;
  std::array<std::vector<int>, 2> run;
  relators_->runs(w, run);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int best = std::max(run[0][i], run[1][i]);
    if (best > half) return std::make_pair(i, static_cast<std::size_t>(best));
  }
  return std::nullopt;
}

bool SurfaceGroup::is_geodesic_word(const Word& w) const {
  return is_freely_reduced(w) && !find_long_piece(w);
}

bool SurfaceGroup::is_reducible(const Word& w) const { return !is_geodesic_word(w); }

bool SurfaceGroup::reduce_once(Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == alphabet_->inverse(w[i])) {
      w.replace(i, 2, Word{});
      return true;
    }
  }
  if (auto p = find_long_piece(w)) {
    Word piece = w.subword(p->first, p->second);
    w.replace(p->first, p->second, relators_->relator_replacement(piece));
    return true;
  }
  return false;
}

std::optional<Word> SurfaceGroup::explore_class(const Word& w, std::vector<Word>& out) const {
  out.clear();
  const std::size_t half = static_cast<std::size_t>(relators_->half_length());
  WordSet seen(out);
  seen.insert(w);
  std::array<std::vector<int>, 2> run;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Word u = out[k];
    if (is_reducible(u)) return u;
    if (u.size() < half) continue;
    relators_->runs(u, run);
    for (std::size_t i = 0; i + half <= u.size(); ++i) {
      if (run[0][i] < static_cast<int>(half) && run[1][i] < static_cast<int>(half)) continue;
      Word v = u;
      v.replace(i, half, relators_->relator_replacement(u.subword(i, half)));
      seen.insert(v);
    }
  }
  return std::nullopt;
}

GroupElement SurfaceGroup::normal_form(const Word& input) const {
  Word w = free_reduce(input);
  std::vector<Word> cls;
  for (;;) {
    if (reduce_once(w)) continue;
    if (auto bad = explore_class(w, cls)) {
      w = *bad;
      reduce_once(w);
      continue;
    }
    const Alphabet& al = *alphabet_;
    auto best = std::min_element(cls.begin(), cls.end(), [&](const Word& a, const Word& b) {
      return al.shortlex_less(a, b);
    });
    return GroupElement(*best);
  }
}

bool SurfaceGroup::is_geodesic(const Word& w) const {
  if (!is_geodesic_word(w)) return false;
  std::vector<Word> cls;
  return !explore_class(w, cls);
}

std::vector<Word> SurfaceGroup::geodesic_class(const Word& w) const {
  std::vector<Word> cls;
  if (!is_geodesic_word(w) || explore_class(w, cls)) {
    throw DomainError("geodesic_class: '" + format(w) + "' is not geodesic");
  }
  const Alphabet& al = *alphabet_;
  std::sort(cls.begin(), cls.end(),
            [&](const Word& a, const Word& b) { return al.shortlex_less(a, b); });
  return cls;
}

GeodesicInfo SurfaceGroup::analyze_geodesic(const Word& w) const {
  std::vector<Word> cls;
  [[maybe_unused]] auto bad = explore_class(w, cls);
  assert(!bad);
  GeodesicInfo info;
  const Alphabet& al = *alphabet_;
  const Word* best = &cls.front();
  for (const Word& u : cls) {
    if (al.shortlex_less(u, *best)) best = &u;
    if (!u.empty()) info.last_letters |= GeneratorMask{1} << u.back().index;
  }
  info.normal_form = *best;
  info.class_size = cls.size();
  return info;
}

GeneratorMask SurfaceGroup::last_letter_mask(const GroupElement& x) const {
  if (x.is_identity()) return 0;
  return analyze_geodesic(x.word()).last_letters;
}

GroupElement SurfaceGroup::multiply(const GroupElement& x, const GroupElement& y) const {
  return normal_form(x.word() + y.word());
}

GroupElement SurfaceGroup::multiply(const GroupElement& x, Generator a) const {
  return normal_form(x.word() + a);
}

GroupElement SurfaceGroup::inverse(const GroupElement& x) const {
  return normal_form(alphabet_->inverse(x.word()));
}

int SurfaceGroup::distance(const GroupElement& x, const GroupElement& y) const {
  return normal_form(alphabet_->inverse(x.word()) + y.word()).length();
}

}  // namespace conetype
