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

#ifndef CONETYPE_CONE_ORACLE_HPP_
#define CONETYPE_CONE_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "conetype/ball.hpp"
#include "conetype/surface_group.hpp"

namespace conetype {

// z lies in the cone type of x: d(e, xz) = |x| + |z|.
bool cone_membership(const SurfaceGroup& group, const GroupElement& x, const GroupElement& z);

// Cone type of x truncated to B(depth), as sorted indices into the
// oracle's ball.
struct Fingerprint {
  int depth = 0;
  std::vector<std::uint32_t> members;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

class ConeOracle {
 public:
  ConeOracle(const SurfaceGroup& group, int depth, const BallOptions& options = {});

  const SurfaceGroup& group() const noexcept { return *group_; }
  int depth() const noexcept { return depth_; }
  const Ball& ball() const noexcept { return ball_; }

  Fingerprint fingerprint(const GroupElement& x) const;
  // Members as group elements, for inspection.
  std::vector<GroupElement> members(const Fingerprint& f) const;

 private:
  const SurfaceGroup* group_;
  int depth_;
  Ball ball_;
  // children_[i * k + rank] = index of word(i)·a in the ball, or -1 when
  // that word is not a normal form.
  std::vector<std::int32_t> children_;
};

// All geodesic words for y, found by walking back from y through elements
// one step closer to the identity. Independent of the twin-swap machinery.
std::vector<Word> enumerate_geodesics(const SurfaceGroup& group, const GroupElement& y);

struct QuadrupleOccurrence {
  Word word;
  std::size_t position;  // 1-based index of the first letter
  Word quadruple;

  friend bool operator==(const QuadrupleOccurrence&, const QuadrupleOccurrence&) = default;
};

// Every length-2g window in R of every geodesic of y. Throws
// VerificationError if two windows of one word overlap in more than one
// letter.
std::vector<QuadrupleOccurrence> quadruple_occurrences(const SurfaceGroup& group,
                                                       const GroupElement& y);

}  // namespace conetype

#endif  // CONETYPE_CONE_ORACLE_HPP_
