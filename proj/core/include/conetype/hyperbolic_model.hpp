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

#ifndef CONETYPE_HYPERBOLIC_MODEL_HPP_
#define CONETYPE_HYPERBOLIC_MODEL_HPP_

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "conetype/alphabet.hpp"

namespace conetype {

using Real = long double;
using Complex = std::complex<Real>;

// Element of SU(1,1): [[alpha, beta], [conj(beta), conj(alpha)]].
struct Mobius {
  Complex alpha{1, 0};
  Complex beta{0, 0};

  Mobius operator*(const Mobius& o) const {
    return {alpha * o.alpha + beta * std::conj(o.beta), alpha * o.beta + beta * std::conj(o.alpha)};
  }
  Mobius inverse() const { return {std::conj(alpha), -beta}; }
};

// A point of the Poincare disk with 1 - |z|^2 carried separately so that
// points close to the boundary keep their hyperbolic precision.
struct DiskPoint {
  Complex z{0, 0};
  Real defect = 1;  // 1 - |z|^2

  Real distance_from_origin() const;
};

Real hyperbolic_distance(const DiskPoint& p, const DiskPoint& q);

// Holonomy of the regular hyperbolic 4g-gon with angles 2*pi/4g: side k
// carries relator letter k and the generators pair opposite-labelled
// sides. The representation is faithful and discrete, so words can be
// compared by where they send the centre of the polygon.
class FuchsianModel {
 public:
  explicit FuchsianModel(const Alphabet& alphabet);

  const Mobius& generator(Generator x) const { return gens_[x.index]; }
  Mobius evaluate(const Word& w) const;
  // Image of the polygon centre under w, computed right to left.
  DiskPoint orbit_point(const Word& w) const;
  // max-entry distance of the relator's image from +-I.
  Real relator_defect() const;
  // Half the minimal displacement of the centre by a nontrivial element.
  Real inradius() const noexcept { return inradius_; }

 private:
  const Alphabet* alphabet_;
  std::vector<Mobius> gens_;
  Real inradius_;
};

// Spatial hash of orbit points; two points closer than half the inradius
// are treated as the same group element.
class OrbitIndex {
 public:
  explicit OrbitIndex(Real separation);

  // Index of an existing point within tolerance, or -1.
  std::int64_t find(const DiskPoint& p) const;
  // Returns (index, inserted).
  std::pair<std::int64_t, bool> insert(const DiskPoint& p);
  std::size_t size() const noexcept { return points_.size(); }

 private:
  struct Cell {
    std::int64_t ring;
    std::int64_t sector;
    bool operator==(const Cell&) const = default;
  };
  struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
      return std::hash<std::int64_t>{}(c.ring * 1000003 + c.sector);
    }
  };
  Cell cell_of(const DiskPoint& p, std::int64_t ring) const;
  std::int64_t sectors(std::int64_t ring) const;

  Real tolerance_;
  std::vector<DiskPoint> points_;
  std::unordered_map<Cell, std::vector<std::int64_t>, CellHash> cells_;
};

}  // namespace conetype

#endif  // CONETYPE_HYPERBOLIC_MODEL_HPP_
