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

#ifndef CONETYPE_MULT_FUNCTIONS_HPP_
#define CONETYPE_MULT_FUNCTIONS_HPP_

#include <vector>

#include "conetype/linear_algebra.hpp"
#include "conetype/matrix_system.hpp"

namespace conetype {

// z lies in the cone C(x, y): some geodesic from x to z passes through y.
bool in_cone(const SurfaceGroup& group, const GroupElement& x, const GroupElement& y,
             const GroupElement& z);

// The elementary multiplicative function mu[C(x, y), v], where v lies in
// the space of the cone type of x^-1 y.
template <class T>
class MultFunc {
 public:
  // Throws DomainError if x == y.
  MultFunc(const ConeTypeTable& table, GroupElement x, GroupElement y, Vector<T> v);

  const GroupElement& x() const noexcept { return x_; }
  const GroupElement& y() const noexcept { return y_; }
  // x^-1 y; the cone is x times the cone of this element.
  const GroupElement& anchor() const noexcept { return anchor_; }
  ConeTypeId type() const noexcept { return type_; }
  const Vector<T>& v() const noexcept { return v_; }
  const ConeTypeTable& table() const noexcept { return *table_; }

  // mu[C(g x, g y), v]; its value at g z equals this function at z.
  MultFunc translate(const GroupElement& g) const;
  // Same cone, another vector.
  MultFunc with_vector(Vector<T> v) const { return MultFunc(*table_, x_, y_, std::move(v)); }

 private:
  const ConeTypeTable* table_;
  GroupElement x_, y_, anchor_;
  ConeTypeId type_;
  Vector<T> v_;
};

// All three return a vector in the space of the type of x^-1 z (empty when
// z == x), zero outside the cone.

// The defining recursion over successors of the anchor, memoised by
// element as propagator matrices.
template <class T>
Vector<T> eval_recursive(const MultFunc<T>& f, const MatrixSystem<T>& sys, const GroupElement& z);

// Sum over geodesics w from y to z of H(c_n, c_{n-1}) ... H(c_1, c_0) v,
// with c_j the type of x^-1 y w_1 ... w_j.
template <class T>
Vector<T> eval_geodesic_sum(const MultFunc<T>& f, const MatrixSystem<T>& sys,
                            const GroupElement& z);

// V_{c_n} N [sum E_{c_{n-1}} N ... N E_{c_1}] N V_{c_0}^T v with the global
// block operator N on the direct sum of all V_c.
template <class T>
Vector<T> eval_matrix_form(const MultFunc<T>& f, const MatrixSystem<T>& sys,
                           const GroupElement& z);

// Direct sum of the spaces V_c and the operators acting on it.
template <class T>
class BlockSpace {
 public:
  explicit BlockSpace(const MatrixSystem<T>& sys);

  int total_dim() const noexcept { return offsets_.back(); }
  int offset(ConeTypeId c) const { return offsets_[c - 1]; }

  // Sparse application of the global operator N.
  Vector<T> apply_n(const Vector<T>& x) const;
  // E_c x: keep only the coordinates of V_c.
  Vector<T> project_keep(const Vector<T>& x, ConeTypeId c) const;
  // V_c^T v and V_c x.
  Vector<T> inject(const Vector<T>& v, ConeTypeId c) const;
  Vector<T> restrict(const Vector<T>& x, ConeTypeId c) const;

  // Dense forms, for algebraic checks.
  DenseMatrix<T> global_matrix() const;
  DenseMatrix<T> injection(ConeTypeId c) const;  // V_c^T: total x d_c
  DenseMatrix<T> projector(ConeTypeId c) const;  // E_c

 private:
  const MatrixSystem<T>* sys_;
  std::vector<int> offsets_;  // offsets_[c - 1], plus total
};

extern template class MultFunc<mpq_class>;
extern template class MultFunc<double>;
extern template class BlockSpace<mpq_class>;
extern template class BlockSpace<double>;

}  // namespace conetype

#endif  // CONETYPE_MULT_FUNCTIONS_HPP_
