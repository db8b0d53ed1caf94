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

#include "conetype/cone_oracle.hpp"

#include <algorithm>

#include "conetype/error.hpp"

namespace conetype {

bool cone_membership(const SurfaceGroup& group, const GroupElement& x, const GroupElement& z) {
  return group.multiply(x, z).length() == x.length() + z.length();
}

ConeOracle::ConeOracle(const SurfaceGroup& group, int depth, const BallOptions& options)
    : group_(&group), depth_(depth), ball_(Ball::build(group, depth, options)) {
  if (depth < 1) throw DomainError("fingerprint depth must be positive");
  const Alphabet& al = group.alphabet();
  const std::size_t k = static_cast<std::size_t>(al.size());
  children_.assign(ball_.size() * k, -1);
  for (std::size_t i = 0; i < ball_.sphere_begin(depth); ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      auto j = ball_.find(ball_.word(i) + al.ordered()[r]);
      if (j && ball_.distance(*j) == ball_.distance(i) + 1) {
        children_[i * k + r] = static_cast<std::int32_t>(*j);
      }
    }
  }
}

Fingerprint ConeOracle::fingerprint(const GroupElement& x) const {
  const Alphabet& al = group_->alphabet();
  const std::size_t k = static_cast<std::size_t>(al.size());
  Fingerprint f;
  f.depth = depth_;
  // Normal forms are prefix closed, so B(depth) is a tree and the cone
  // is a subtree: once x·z stops being geodesic, nothing below it is.
  auto visit = [&](auto&& self, std::size_t node, GeneratorMask mask) -> void {
    f.members.push_back(static_cast<std::uint32_t>(node));
    if (ball_.distance(node) == depth_) return;
    for (std::size_t r = 0; r < k; ++r) {
      std::int32_t child = children_[node * k + r];
      if (child < 0) continue;
      Generator a = al.ordered()[r];
      if (mask_has(mask, al.inverse(a))) continue;
      Word w = x.word() + ball_.word(static_cast<std::size_t>(child));
      GeneratorMask m = group_->analyze_geodesic(w).last_letters;
      self(self, static_cast<std::size_t>(child), m);
    }
  };
  visit(visit, 0, group_->last_letter_mask(x));
  std::sort(f.members.begin(), f.members.end());
  return f;
}

std::vector<GroupElement> ConeOracle::members(const Fingerprint& f) const {
  std::vector<GroupElement> out;
  out.reserve(f.members.size());
  for (std::uint32_t i : f.members) out.push_back(group_->normal_form(ball_.word(i)));
  return out;
}

std::vector<Word> enumerate_geodesics(const SurfaceGroup& group, const GroupElement& y) {
  const Alphabet& al = group.alphabet();
  std::vector<Word> out;
  Word suffix;
  auto walk = [&](auto&& self, const GroupElement& node) -> void {
    if (node.is_identity()) {
      Word w;
      for (std::size_t i = suffix.size(); i-- > 0;) w.push_back(suffix[i]);
      out.push_back(std::move(w));
      return;
    }
    for (Generator a : al.ordered()) {
      GroupElement p = group.multiply(node, al.inverse(a));
      if (p.length() != node.length() - 1) continue;
      suffix.push_back(a);
      self(self, p);
      suffix.pop_back();
    }
  };
  walk(walk, y);
  std::sort(out.begin(), out.end(),
            [&](const Word& u, const Word& v) { return al.shortlex_less(u, v); });
  return out;
}

std::vector<QuadrupleOccurrence> quadruple_occurrences(const SurfaceGroup& group,
                                                       const GroupElement& y) {
  const std::size_t half = static_cast<std::size_t>(group.relators().half_length());
  std::vector<QuadrupleOccurrence> out;
  for (const Word& w : group.geodesic_class(y)) {
    std::size_t last = 0;
    bool have_last = false;
    for (std::size_t i = 0; i + half <= w.size(); ++i) {
      Word q = w.subword(i, half);
      if (!group.is_in_R(q)) continue;
      if (have_last && i - last < half - 1) {
        throw VerificationError("quadruples of '" + group.format(w) +
                                "' overlap in more than one letter");
      }
      last = i;
      have_last = true;
      out.push_back({w, i + 1, std::move(q)});
    }
  }
  return out;
}

}  // namespace conetype
