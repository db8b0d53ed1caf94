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

#include "conetype/cone_types.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include <nlohmann/json.hpp>

#include "conetype/error.hpp"

namespace conetype {

ConeTypeTable::ConeTypeTable(const SurfaceGroup& group, CascadeMode mode)
    : group_(&group), mode_(mode) {
  const Alphabet& al = group.alphabet();
  const RelatorTable& rt = group.relators();
  const int half = rt.half_length();
  for (int len = 1; len <= half; ++len) {
    class_offsets_.push_back(static_cast<ConeTypeId>(reps_.size()) + 1);
    for (Generator x : al.ordered()) {
      for (int d = 0; d < 2; ++d) {
        if (d == 1 && (len == 1 || len == half)) continue;
        Word w = rt.piece(x, d, len);
        ConeTypeId id = static_cast<ConeTypeId>(reps_.size()) + 1;
        ids_.emplace(w, id);
        if (len == half) ids_.emplace(rt.twin(w), id);
        reps_.push_back(std::move(w));
      }
    }
  }
  class_offsets_.push_back(static_cast<ConeTypeId>(reps_.size()) + 1);
  if (static_cast<int>(reps_.size()) != group.genus().cone_type_count()) {
    throw VerificationError("representative count does not match 8g(2g-1)");
  }
  for (const Word& w : reps_) {
    in_degree_.push_back(std::popcount(group.last_letter_mask(group.normal_form(w))));
  }
}

std::optional<ConeTypeId> ConeTypeTable::id_of(const Word& w) const {
  auto it = ids_.find(w);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool ConeTypeTable::cascade_available() const noexcept {
  return mode_ == CascadeMode::experimental || group_->genus().value() == 2;
}

void ConeTypeTable::require_cascade() const {
  if (!cascade_available()) {
    throw DomainError(
        "the suffix cascade is only established for genus 2; use OracleClassifier or the "
        "experimental cascade");
  }
}

std::optional<ConeTypeId> ConeTypeTable::successor(ConeTypeId c, Generator a) const {
  require_cascade();
  if (c == 0) return ids_.at(Word{a.index});
  const Alphabet& al = group_->alphabet();
  const RelatorTable& rt = group_->relators();
  const Word& z = representative(c);
  const std::size_t len = z.size();
  const std::size_t half = static_cast<std::size_t>(rt.half_length());
  if (a == al.inverse(z.back())) return std::nullopt;
  auto id = [&](const Word& w) { return ids_.at(w); };
  const Word single{a.index};
  const Word tail = Word{z.back().index} + a;
  if (len < half) {
    if (Word za = z + a; rt.contains(za)) return id(za);
    if (len >= 2 && rt.contains(tail)) return id(tail);
    return id(single);
  }
  const Word t = rt.twin(z);
  if (a == al.inverse(t.back())) return std::nullopt;
  const Word twin_tail = Word{t.back().index} + a;
  const bool own = rt.contains(tail);
  const bool other = rt.contains(twin_tail);
  if (own && other) {
    throw VerificationError("ambiguous cascade at type " + std::to_string(c) + " with letter " +
                            al.format(a));
  }
  if (own) return id(tail);
  if (other) return id(twin_tail);
  return id(single);
}

int ConeTypeTable::out_degree(ConeTypeId c) const {
  int n = 0;
  for (Generator a : group_->alphabet().ordered()) n += successor(c, a).has_value();
  return n;
}

ConeTypeId ConeTypeTable::classify(const GroupElement& x) const {
  ConeTypeId c = 0;
  const Word& w = x.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto next = successor(c, w[i]);
    if (!next) {
      throw VerificationError("normal form '" + group_->format(x) + "' leaves the cone of type " +
                              std::to_string(c) + " at letter " + std::to_string(i + 1));
    }
    c = *next;
  }
  return c;
}

nlohmann::json ConeTypeTable::to_json() const {
  const Alphabet& al = group_->alphabet();
  nlohmann::json types = nlohmann::json::array();
  for (ConeTypeId id = 0; id <= size(); ++id) {
    nlohmann::json row;
    row["id"] = id;
    row["representative"] = id == 0 ? "" : al.format(representative(id));
    row["length"] = length_class(id);
    if (cascade_available()) {
      nlohmann::json succ = nlohmann::json::object();
      for (Generator a : al.ordered()) {
        auto s = successor(id, a);
        succ[al.format(a)] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
      }
      row["successors"] = std::move(succ);
    }
    types.push_back(std::move(row));
  }
  nlohmann::json out;
  out["genus"] = group_->genus().value();
  nlohmann::json order = nlohmann::json::array();
  for (Generator a : al.ordered()) order.push_back(al.format(a));
  out["generator_order"] = std::move(order);
  out["types"] = std::move(types);
  return out;
}

OracleClassifier::OracleClassifier(const ConeTypeTable& table, int depth, int max_depth,
                                   const BallOptions& options)
    : table_(&table) {
  const SurfaceGroup& group = table.group();
  for (;; ++depth) {
    if (depth > max_depth) {
      throw VerificationError("cone fingerprints of the representatives collide up to depth " +
                              std::to_string(max_depth));
    }
    oracle_ = std::make_unique<ConeOracle>(group, depth, options);
    rep_fps_.clear();
    lookup_.clear();
    rep_fps_.push_back(oracle_->fingerprint(group.identity()));
    for (ConeTypeId id = 1; id <= table.size(); ++id) {
      rep_fps_.push_back(oracle_->fingerprint(group.normal_form(table.representative(id))));
    }
    bool distinct = true;
    for (ConeTypeId id = 0; id < static_cast<ConeTypeId>(rep_fps_.size()) && distinct; ++id) {
      distinct = lookup_.emplace(rep_fps_[id], id).second;
    }
    if (distinct) break;
  }
}

ConeTypeId OracleClassifier::classify(const GroupElement& x) const {
  auto it = lookup_.find(oracle_->fingerprint(x));
  if (it == lookup_.end()) {
    throw VerificationError("fingerprint of '" + table_->group().format(x) +
                            "' matches no representative");
  }
  return it->second;
}

}  // namespace conetype
