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

#include "conetype/ball.hpp"

#include <algorithm>
#include <limits>

#include "conetype/error.hpp"

namespace conetype {

std::uint64_t ball_size_bound(Genus genus, int radius) {
  const std::uint64_t k = static_cast<std::uint64_t>(genus.alphabet_size());
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / k;
  std::uint64_t total = 1, sphere = 1;
  for (int n = 1; n <= radius; ++n) {
    if (sphere > cap) return std::numeric_limits<std::uint64_t>::max();
    sphere = n == 1 ? k : sphere * (k - 1);
    total += sphere;
  }
  return total;
}

Ball Ball::build(const SurfaceGroup& group, int radius, const BallOptions& options) {
  if (radius < 0) throw DomainError("ball radius must be nonnegative");
  if (radius > 255) throw ResourceError("ball radius exceeds 255");
  const std::uint64_t bound = ball_size_bound(group.genus(), radius);
  if (bound > options.max_elements) {
    throw ResourceError("ball of radius " + std::to_string(radius) + " may hold " +
                        std::to_string(bound) + " elements; cap is " +
                        std::to_string(options.max_elements));
  }
  const Alphabet& al = group.alphabet();
  Ball ball;
  ball.radius_ = radius;
  ball.words_.emplace_back();
  ball.dist_.push_back(0);
  ball.masks_.push_back(0);
  ball.index_.emplace(Word{}, 0);
  ball.offsets_ = {0, 1};

  std::vector<std::vector<Predecessor>> incoming(1);
  for (int n = 0; n < radius; ++n) {
    const std::size_t lo = ball.offsets_[n], hi = ball.offsets_[n + 1];
    for (std::size_t x = lo; x < hi; ++x) {
      for (Generator a : al.ordered()) {
        if (mask_has(ball.masks_[x], al.inverse(a))) continue;
        Word w = ball.words_[x] + a;
        GeodesicInfo info = group.analyze_geodesic(w);
        auto found = ball.index_.find(info.normal_form);
        std::uint32_t y;
        if (found == ball.index_.end()) {
          y = static_cast<std::uint32_t>(ball.words_.size());
          ball.index_.emplace(info.normal_form, y);
          ball.words_.push_back(std::move(info.normal_form));
          ball.dist_.push_back(static_cast<std::uint8_t>(n + 1));
          ball.masks_.push_back(info.last_letters);
          incoming.emplace_back();
        } else {
          y = found->second;
        }
        incoming[y].push_back({static_cast<std::uint32_t>(x), a});
      }
    }
    ball.offsets_.push_back(ball.words_.size());
  }

  ball.pred_offsets_.assign(ball.words_.size() + 1, 0);
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    ball.pred_offsets_[i + 1] = ball.pred_offsets_[i] + incoming[i].size();
  }
  ball.preds_.reserve(ball.pred_offsets_.back());
  for (auto& v : incoming) ball.preds_.insert(ball.preds_.end(), v.begin(), v.end());

  ball.geo_counts_.assign(ball.words_.size(), 0);
  ball.geo_counts_[0] = 1;
  for (std::size_t i = 1; i < ball.words_.size(); ++i) {
    for (const Predecessor& p : ball.predecessors(i)) ball.geo_counts_[i] += ball.geo_counts_[p.node];
  }
  return ball;
}

std::vector<std::uint64_t> Ball::sphere_sizes() const {
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= radius_; ++n) out.push_back(offsets_[n + 1] - offsets_[n]);
  return out;
}

std::optional<std::size_t> Ball::find(const Word& normal_form) const {
  auto it = index_.find(normal_form);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Word> Ball::geodesics(std::size_t i) const {
  std::vector<Word> out;
  Word suffix;
  // Depth-first from i back to the identity, collecting reversed words.
  auto walk = [&](auto&& self, std::size_t node) -> void {
    if (node == 0) {
      Word w;
      for (std::size_t k = suffix.size(); k-- > 0;) w.push_back(suffix[k]);
      out.push_back(std::move(w));
      return;
    }
    for (const Predecessor& p : predecessors(node)) {
      suffix.push_back(p.letter);
      self(self, p.node);
      suffix.pop_back();
    }
  };
  walk(walk, i);
  std::sort(out.begin(), out.end());
  return out;
}

void Ball::write_dot(std::ostream& os, const Alphabet& alphabet) const {
  os << "digraph ball {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::string label = alphabet.format(words_[i]);
    os << "  n" << i << " [label=\"" << (label.empty() ? "e" : label) << "\"];\n";
  }
  for (std::size_t i = 1; i < words_.size(); ++i) {
    for (const Predecessor& p : predecessors(i)) {
      os << "  n" << p.node << " -> n" << i << " [label=\"" << alphabet.format(p.letter)
         << "\"];\n";
    }
  }
  os << "}\n";
}

}  // namespace conetype
