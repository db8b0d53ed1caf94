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

#ifndef CONETYPE_MATRIX_SYSTEM_HPP_
#define CONETYPE_MATRIX_SYSTEM_HPP_

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "conetype/cone_types.hpp"
#include "conetype/linear_algebra.hpp"

namespace conetype {

// Transition c -> c' realised by exactly one generator.
struct AdmissiblePair {
  ConeTypeId to;
  ConeTypeId from;
  Generator letter;
};

// Ordered by source then generator order. Throws VerificationError if two
// generators realise the same pair.
std::vector<AdmissiblePair> admissible_pairs(const ConeTypeTable& table);

// Vector-space dimension per length class (singles, doubles, ...).
struct DimsProfile {
  std::vector<int> per_class;

  static DimsProfile scalar(int classes) { return {std::vector<int>(classes, 1)}; }
};

// Dimensions indexed by cone-type id; entry 0 (identity) is 0.
std::vector<int> dims_for(const ConeTypeTable& table, const DimsProfile& profile);

// Spaces V_c for c >= 1 and maps H(c', c): V_c -> V_c' on admissible
// pairs. The generator is implied by the pair.
template <class T>
class MatrixSystem {
 public:
  MatrixSystem(const ConeTypeTable& table, std::vector<int> dims);

  const ConeTypeTable& table() const noexcept { return *table_; }
  int type_count() const noexcept { return table_->size(); }
  int dim(ConeTypeId c) const { return dims_.at(c); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<AdmissiblePair>& pairs() const noexcept { return pairs_; }
  // Index into pairs(), or -1 when (to, from) is not admissible.
  int pair_index(ConeTypeId to, ConeTypeId from) const;

  // nullptr for non-admissible pairs, which act as zero.
  const DenseMatrix<T>* block(ConeTypeId to, ConeTypeId from) const;
  const DenseMatrix<T>& block_at(std::size_t pair) const { return blocks_[pair]; }
  void set_block(ConeTypeId to, ConeTypeId from, DenseMatrix<T> h);

  template <class U>
  MatrixSystem<U> convert() const {
    MatrixSystem<U> out(*table_, dims_);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      DenseMatrix<U> h(blocks_[p].rows, blocks_[p].cols);
      for (std::size_t i = 0; i < h.data.size(); ++i) {
        h.data[i] = convert_scalar<U>(blocks_[p].data[i]);
      }
      out.set_block(pairs_[p].to, pairs_[p].from, std::move(h));
    }
    return out;
  }

 private:
  const ConeTypeTable* table_;
  std::vector<int> dims_;
  std::vector<AdmissiblePair> pairs_;
  std::vector<int> pair_lookup_;  // (to - 1) * N + (from - 1)
  std::vector<DenseMatrix<T>> blocks_;
};

extern template class MatrixSystem<mpq_class>;
extern template class MatrixSystem<double>;

using RationalSystem = MatrixSystem<mpq_class>;
using FloatSystem = MatrixSystem<double>;

// Reproducible system with entries p/q, p in [-3, 3], q in [1, 4].
RationalSystem random_system(const ConeTypeTable& table, const DimsProfile& profile,
                             std::uint64_t seed);
// Scalar system with every admissible H equal to 1.
RationalSystem ones_system(const ConeTypeTable& table);

// {"dims": {"<id>": d}, "blocks": [{"from": c, "to": c', "entries": [...]}]}
// with row-major entries written as strings "p/q" (numbers are accepted
// on input).
nlohmann::json system_to_json(const RationalSystem& sys);
RationalSystem system_from_json(const ConeTypeTable& table, const nlohmann::json& j);

}  // namespace conetype

#endif  // CONETYPE_MATRIX_SYSTEM_HPP_
