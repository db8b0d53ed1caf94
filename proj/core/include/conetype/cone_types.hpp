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

#ifndef CONETYPE_CONE_TYPES_HPP_
#define CONETYPE_CONE_TYPES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "conetype/cone_oracle.hpp"
#include "conetype/surface_group.hpp"

namespace conetype {

// 0 is the identity's cone type; 1..8g(2g-1) index representatives.
using ConeTypeId = int;

enum class CascadeMode {
  // Suffix cascade; only accepted for genus 2.
  standard,
  // Same rules for any genus. Not established beyond genus 2.
  experimental,
};

// Cone-type representatives (members of R up to twins) with the suffix
// cascade successor map.
//
// Representatives are ordered by length, then by first letter in the
// generator order, reading along the relator before its inverse. Of each
// twin pair of half-relator words only the one read along the relator is
// kept; for genus 2 this is exactly the classical table of 48 types.
class ConeTypeTable {
 public:
  ConeTypeTable(const SurfaceGroup& group, CascadeMode mode = CascadeMode::standard);

  const SurfaceGroup& group() const noexcept { return *group_; }
  CascadeMode mode() const noexcept { return mode_; }
  int size() const noexcept { return static_cast<int>(reps_.size()); }
  // Representative of id in [1, size()].
  const Word& representative(ConeTypeId id) const { return reps_.at(id - 1); }
  const std::vector<Word>& representatives() const noexcept { return reps_; }
  // Length of the representative: 1 single, 2 double, ... 2g half-relator.
  int length_class(ConeTypeId id) const {
    return id == 0 ? 0 : static_cast<int>(representative(id).size());
  }
  // First id of each length class, plus size() + 1 at the end.
  const std::vector<ConeTypeId>& class_offsets() const noexcept { return class_offsets_; }
  // Id of a member of R, twins included.
  std::optional<ConeTypeId> id_of(const Word& w) const;

  bool cascade_available() const noexcept;
  // Cone type of x·a for x of type c, or nullopt when a leaves the cone.
  std::optional<ConeTypeId> successor(ConeTypeId c, Generator a) const;
  int out_degree(ConeTypeId c) const;
  // Number of geodesic edges arriving at an element of type c.
  int in_degree(ConeTypeId c) const { return c == 0 ? 0 : in_degree_.at(c - 1); }
  // Walks successor() along the normal form of x.
  ConeTypeId classify(const GroupElement& x) const;

  nlohmann::json to_json() const;

 private:
  void require_cascade() const;

  const SurfaceGroup* group_;
  CascadeMode mode_;
  std::vector<Word> reps_;
  std::vector<ConeTypeId> class_offsets_;
  std::vector<int> in_degree_;
  std::unordered_map<Word, ConeTypeId> ids_;
};

// Ground-truth classifier: compares bounded-depth cone fingerprints
// against those of the representatives. The depth is raised until every
// representative and the identity have distinct fingerprints.
class OracleClassifier {
 public:
  OracleClassifier(const ConeTypeTable& table, int depth = 4, int max_depth = 7,
                   const BallOptions& options = {});

  int depth() const noexcept { return oracle_->depth(); }
  const ConeOracle& oracle() const noexcept { return *oracle_; }
  const Fingerprint& representative_fingerprint(ConeTypeId id) const { return rep_fps_.at(id); }
  // Throws VerificationError if no representative matches.
  ConeTypeId classify(const GroupElement& x) const;

 private:
  const ConeTypeTable* table_;
  std::unique_ptr<ConeOracle> oracle_;
  std::vector<Fingerprint> rep_fps_;  // index 0 = identity
  std::map<Fingerprint, ConeTypeId> lookup_;
};

}  // namespace conetype

#endif  // CONETYPE_CONE_TYPES_HPP_
