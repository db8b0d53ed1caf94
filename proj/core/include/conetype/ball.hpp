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

#ifndef CONETYPE_BALL_HPP_
#define CONETYPE_BALL_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "conetype/surface_group.hpp"

namespace conetype {

struct BallOptions {
  // Refuse to build a ball whose size bound exceeds this many elements.
  std::uint64_t max_elements = 20'000'000;
};

struct Predecessor {
  std::uint32_t node;
  Generator letter;
};

// Upper bound on |B(radius)| by counting freely reduced words.
std::uint64_t ball_size_bound(Genus genus, int radius);

// Breadth-first ball of the Cayley graph around the identity. Elements are
// numbered sphere by sphere; inside a sphere, in discovery order, which is
// deterministic.
class Ball {
 public:
  static Ball build(const SurfaceGroup& group, int radius, const BallOptions& options = {});

  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return words_.size(); }
  // Sizes of S(0), ..., S(radius).
  std::vector<std::uint64_t> sphere_sizes() const;
  std::size_t sphere_begin(int n) const { return offsets_[n]; }
  std::size_t sphere_end(int n) const { return offsets_[n + 1]; }

  const Word& word(std::size_t i) const { return words_[i]; }
  int distance(std::size_t i) const { return dist_[i]; }
  GeneratorMask last_letters(std::size_t i) const { return masks_[i]; }
  std::optional<std::size_t> find(const Word& normal_form) const;
  std::optional<std::size_t> find(const GroupElement& x) const { return find(x.word()); }

  // Pairs (p, a) with word(p)·a = word(i) and |p| = |i| - 1.
  std::span<const Predecessor> predecessors(std::size_t i) const {
    return {preds_.data() + pred_offsets_[i], preds_.data() + pred_offsets_[i + 1]};
  }
  // Number of geodesic words, by dynamic programming over predecessors.
  std::uint64_t geodesic_count(std::size_t i) const { return geo_counts_[i]; }
  // All geodesic words ending at element i, read off the geodesic DAG.
  std::vector<Word> geodesics(std::size_t i) const;

  void write_dot(std::ostream& os, const Alphabet& alphabet) const;

 private:
  int radius_ = 0;
  std::vector<Word> words_;
  std::vector<std::uint8_t> dist_;
  std::vector<GeneratorMask> masks_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> pred_offsets_;
  std::vector<Predecessor> preds_;
  std::vector<std::uint64_t> geo_counts_;
  std::unordered_map<Word, std::uint32_t> index_;
};

}  // namespace conetype

#endif  // CONETYPE_BALL_HPP_
