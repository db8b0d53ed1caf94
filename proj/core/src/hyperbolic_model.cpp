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

#include "conetype/hyperbolic_model.hpp"

#include <cmath>
#include <numbers>

namespace conetype {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

Mobius rotation(Real t) {
  return {std::polar<Real>(1, t / 2), Complex(0, 0)};
}

Mobius translation(Real t) {
  // Real hyperbolic translation along the diameter, normalised to SU(1,1).
  return {Complex(std::cosh(t / 2), 0), Complex(std::sinh(t / 2), 0)};
}

}  // namespace

Real DiskPoint::distance_from_origin() const {
  // cosh(d) = 1 + 2|z|^2 / (1 - |z|^2)
  return std::acosh(1 + 2 * std::norm(z) / defect);
}

Real hyperbolic_distance(const DiskPoint& p, const DiskPoint& q) {
  return std::acosh(1 + 2 * std::norm(p.z - q.z) / (p.defect * q.defect));
}

FuchsianModel::FuchsianModel(const Alphabet& alphabet) : alphabet_(&alphabet) {
  const int n = alphabet.size();
  const int g = alphabet.genus().value();
  inradius_ = std::acosh(1 / std::tan(kPi / n));
  const Word& rel = alphabet.relator();
  std::vector<int> side(n);
  for (int k = 0; k < n; ++k) side[rel[k].index] = k;
  auto theta = [n](int k) { return 2 * kPi * k / n; };
  // Maps side j onto side k, interior to exterior.
  auto pair = [&](int j, int k) {
    return rotation(theta(k)) * translation(2 * inradius_) * rotation(kPi - theta(j));
  };
  gens_.resize(n);
  for (int i = 0; i < 2 * g; ++i) {
    Generator x(i);
    Generator xi = alphabet.inverse(x);
    Mobius m = i % 2 == 0 ? pair(side[xi.index], side[x.index]) : pair(side[x.index], side[xi.index]);
    gens_[x.index] = m;
    gens_[xi.index] = m.inverse();
  }
}

Mobius FuchsianModel::evaluate(const Word& w) const {
  Mobius m;
  for (std::size_t i = 0; i < w.size(); ++i) m = m * gens_[w[i].index];
  return m;
}

DiskPoint FuchsianModel::orbit_point(const Word& w) const {
  DiskPoint p;
  for (std::size_t i = w.size(); i-- > 0;) {
    const Mobius& m = gens_[w[i].index];
    Complex den = std::conj(m.beta) * p.z + std::conj(m.alpha);
    p.z = (m.alpha * p.z + m.beta) / den;
    p.defect /= std::norm(den);
  }
  return p;
}

Real FuchsianModel::relator_defect() const {
  Mobius r = evaluate(alphabet_->relator());
  Real plus = std::max(std::abs(r.alpha - Complex(1, 0)), std::abs(r.beta));
  Real minus = std::max(std::abs(r.alpha + Complex(1, 0)), std::abs(r.beta));
  return std::min(plus, minus);
}

OrbitIndex::OrbitIndex(Real separation) : tolerance_(separation / 2) {}

std::int64_t OrbitIndex::sectors(std::int64_t ring) const {
  Real arc = 2 * kPi * std::sinh(static_cast<Real>(ring + 2));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(arc)));
}

OrbitIndex::Cell OrbitIndex::cell_of(const DiskPoint& p, std::int64_t ring) const {
  Real phi = std::arg(p.z);
  if (phi < 0) phi += 2 * kPi;
  std::int64_t s = sectors(ring);
  std::int64_t k = static_cast<std::int64_t>(phi / (2 * kPi) * static_cast<Real>(s));
  return {ring, ((k % s) + s) % s};
}

std::int64_t OrbitIndex::find(const DiskPoint& p) const {
  const std::int64_t ring = static_cast<std::int64_t>(p.distance_from_origin());
  for (std::int64_t r = std::max<std::int64_t>(0, ring - 1); r <= ring + 1; ++r) {
    Cell c = cell_of(p, r);
    const std::int64_t s = sectors(r);
    for (std::int64_t ds = -1; ds <= 1; ++ds) {
      auto it = cells_.find({r, ((c.sector + ds) % s + s) % s});
      if (it == cells_.end()) continue;
      for (std::int64_t idx : it->second) {
        if (hyperbolic_distance(points_[idx], p) < tolerance_) return idx;
      }
    }
  }
  return -1;
}

std::pair<std::int64_t, bool> OrbitIndex::insert(const DiskPoint& p) {
  if (auto idx = find(p); idx >= 0) return {idx, false};
  const std::int64_t idx = static_cast<std::int64_t>(points_.size());
  points_.push_back(p);
  const std::int64_t ring = static_cast<std::int64_t>(p.distance_from_origin());
  cells_[cell_of(p, ring)].push_back(idx);
  return {idx, true};
}

}  // namespace conetype
