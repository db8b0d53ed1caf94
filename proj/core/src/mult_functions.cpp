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

#include "conetype/mult_functions.hpp"

#include <unordered_map>

namespace conetype {

bool in_cone(const SurfaceGroup& group, const GroupElement& x, const GroupElement& y,
             const GroupElement& z) {
  return group.distance(x, z) == group.distance(x, y) + group.distance(y, z);
}

template <class T>
MultFunc<T>::MultFunc(const ConeTypeTable& table, GroupElement x, GroupElement y, Vector<T> v)
    : table_(&table), x_(std::move(x)), y_(std::move(y)), v_(std::move(v)) {
  const SurfaceGroup& group = table.group();
  anchor_ = group.multiply(group.inverse(x_), y_);
  if (anchor_.is_identity()) throw DomainError("a cone C(x, y) needs x != y");
  type_ = table.classify(anchor_);
}

template <class T>
MultFunc<T> MultFunc<T>::translate(const GroupElement& g) const {
  const SurfaceGroup& group = table_->group();
  return MultFunc(*table_, group.multiply(g, x_), group.multiply(g, y_), v_);
}

namespace {

struct Target {
  GroupElement t;  // x^-1 z
  ConeTypeId type;
  bool inside;
};

template <class T>
Target locate(const MultFunc<T>& f, const MatrixSystem<T>& sys, const GroupElement& z) {
  if (static_cast<int>(f.v().size()) != sys.dim(f.type())) {
    throw DomainError("vector has dimension " + std::to_string(f.v().size()) + ", type " +
                      std::to_string(f.type()) + " needs " + std::to_string(sys.dim(f.type())));
  }
  const SurfaceGroup& group = f.table().group();
  Target tg;
  tg.t = group.multiply(group.inverse(f.x()), z);
  tg.type = f.table().classify(tg.t);
  const GroupElement& u = f.anchor();
  tg.inside = tg.t.length() == u.length() + group.distance(u, tg.t);
  return tg;
}

template <class T>
const DenseMatrix<T>& transition(const MatrixSystem<T>& sys, ConeTypeId to, ConeTypeId from) {
  const DenseMatrix<T>* h = sys.block(to, from);
  if (!h) {
    throw VerificationError("geodesic step " + std::to_string(from) + " -> " + std::to_string(to) +
                            " is not an admissible transition");
  }
  return *h;
}

// Cone types c_1..c_n along u·w.
std::vector<ConeTypeId> path_types(const ConeTypeTable& table, const GroupElement& u,
                                   const Word& w) {
  const SurfaceGroup& group = table.group();
  std::vector<ConeTypeId> types;
  GroupElement cur = u;
  for (std::size_t j = 0; j < w.size(); ++j) {
    cur = group.multiply(cur, w[j]);
    types.push_back(table.classify(cur));
  }
  return types;
}

}  // namespace

template <class T>
Vector<T> eval_recursive(const MultFunc<T>& f, const MatrixSystem<T>& sys, const GroupElement& z) {
  const Target tg = locate(f, sys, z);
  const int out_dim = sys.dim(tg.type);
  if (!tg.inside) return Vector<T>(out_dim, T(0));
  const ConeTypeTable& table = f.table();
  const SurfaceGroup& group = table.group();
  const int tlen = tg.t.length();

  std::unordered_map<GroupElement, DenseMatrix<T>> memo;
  // Linear map from V_{type(node)} to V_{type(t)}.
  auto propagate = [&](auto&& self, const GroupElement& node,
                       ConeTypeId c) -> const DenseMatrix<T>& {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    if (node == tg.t) return memo.emplace(node, DenseMatrix<T>::identity(out_dim)).first->second;
    DenseMatrix<T> acc(out_dim, sys.dim(c));
    for (Generator a : group.alphabet().ordered()) {
      if (!group.extends(node, a)) continue;
      GroupElement child = group.multiply(node, a);
      if (tlen != child.length() + group.distance(child, tg.t)) continue;
      ConeTypeId cc = table.classify(child);
      add_into(acc, self(self, child, cc) * transition(sys, cc, c));
    }
    return memo.emplace(node, std::move(acc)).first->second;
  };
  return propagate(propagate, f.anchor(), f.type()) * f.v();
}

template <class T>
Vector<T> eval_geodesic_sum(const MultFunc<T>& f, const MatrixSystem<T>& sys,
                            const GroupElement& z) {
  const Target tg = locate(f, sys, z);
  Vector<T> acc(sys.dim(tg.type), T(0));
  if (!tg.inside) return acc;
  const SurfaceGroup& group = f.table().group();
  const GroupElement step = group.multiply(group.inverse(f.anchor()), tg.t);
  for (const Word& w : group.geodesic_class(step)) {
    std::vector<ConeTypeId> types = path_types(f.table(), f.anchor(), w);
    Vector<T> vec = f.v();
    ConeTypeId prev = f.type();
    for (ConeTypeId c : types) {
      vec = transition(sys, c, prev) * vec;
      prev = c;
    }
    add_into(acc, vec);
  }
  return acc;
}

template <class T>
Vector<T> eval_matrix_form(const MultFunc<T>& f, const MatrixSystem<T>& sys,
                           const GroupElement& z) {
  const Target tg = locate(f, sys, z);
  if (!tg.inside) return Vector<T>(sys.dim(tg.type), T(0));
  const SurfaceGroup& group = f.table().group();
  const GroupElement step = group.multiply(group.inverse(f.anchor()), tg.t);
  if (step.is_identity()) return f.v();
  const BlockSpace<T> space(sys);
  const Vector<T> first = space.apply_n(space.inject(f.v(), f.type()));
  const std::size_t n = static_cast<std::size_t>(step.length());
  if (n == 1) return space.restrict(first, tg.type);

  Vector<T> bracket(space.total_dim(), T(0));
  for (const Word& w : group.geodesic_class(step)) {
    std::vector<ConeTypeId> types = path_types(f.table(), f.anchor(), w);
    Vector<T> x = space.project_keep(first, types[0]);
    for (std::size_t j = 1; j + 1 < n; ++j) x = space.project_keep(space.apply_n(x), types[j]);
    add_into(bracket, x);
  }
  return space.restrict(space.apply_n(bracket), tg.type);
}

template <class T>
BlockSpace<T>::BlockSpace(const MatrixSystem<T>& sys) : sys_(&sys) {
  offsets_.push_back(0);
  for (ConeTypeId c = 1; c <= sys.type_count(); ++c) offsets_.push_back(offsets_.back() + sys.dim(c));
}

template <class T>
Vector<T> BlockSpace<T>::apply_n(const Vector<T>& x) const {
  Vector<T> out(total_dim(), T(0));
  for (std::size_t p = 0; p < sys_->pairs().size(); ++p) {
    const AdmissiblePair& pr = sys_->pairs()[p];
    const DenseMatrix<T>& h = sys_->block_at(p);
    const int ro = offset(pr.to), co = offset(pr.from);
    for (int r = 0; r < h.rows; ++r) {
      for (int c = 0; c < h.cols; ++c) out[ro + r] += h(r, c) * x[co + c];
    }
  }
  return out;
}

template <class T>
Vector<T> BlockSpace<T>::project_keep(const Vector<T>& x, ConeTypeId c) const {
  Vector<T> out(total_dim(), T(0));
  for (int i = offset(c); i < offset(c) + sys_->dim(c); ++i) out[i] = x[i];
  return out;
}

template <class T>
Vector<T> BlockSpace<T>::inject(const Vector<T>& v, ConeTypeId c) const {
  if (static_cast<int>(v.size()) != sys_->dim(c)) throw DomainError("injection shape mismatch");
  Vector<T> out(total_dim(), T(0));
  for (int i = 0; i < sys_->dim(c); ++i) out[offset(c) + i] = v[i];
  return out;
}

template <class T>
Vector<T> BlockSpace<T>::restrict(const Vector<T>& x, ConeTypeId c) const {
  return Vector<T>(x.begin() + offset(c), x.begin() + offset(c) + sys_->dim(c));
}

template <class T>
DenseMatrix<T> BlockSpace<T>::global_matrix() const {
  DenseMatrix<T> n(total_dim(), total_dim());
  for (std::size_t p = 0; p < sys_->pairs().size(); ++p) {
    const AdmissiblePair& pr = sys_->pairs()[p];
    const DenseMatrix<T>& h = sys_->block_at(p);
    for (int r = 0; r < h.rows; ++r) {
      for (int c = 0; c < h.cols; ++c) n(offset(pr.to) + r, offset(pr.from) + c) = h(r, c);
    }
  }
  return n;
}

template <class T>
DenseMatrix<T> BlockSpace<T>::injection(ConeTypeId c) const {
  DenseMatrix<T> m(total_dim(), sys_->dim(c));
  for (int i = 0; i < sys_->dim(c); ++i) m(offset(c) + i, i) = T(1);
  return m;
}

template <class T>
DenseMatrix<T> BlockSpace<T>::projector(ConeTypeId c) const {
  DenseMatrix<T> m(total_dim(), total_dim());
  for (int i = 0; i < sys_->dim(c); ++i) m(offset(c) + i, offset(c) + i) = T(1);
  return m;
}

template class MultFunc<mpq_class>;
template class MultFunc<double>;
template class BlockSpace<mpq_class>;
template class BlockSpace<double>;

#define CONETYPE_INSTANTIATE(T)                                                             \
  template Vector<T> eval_recursive(const MultFunc<T>&, const MatrixSystem<T>&,            \
                                    const GroupElement&);                                  \
  template Vector<T> eval_geodesic_sum(const MultFunc<T>&, const MatrixSystem<T>&,         \
                                       const GroupElement&);                               \
  template Vector<T> eval_matrix_form(const MultFunc<T>&, const MatrixSystem<T>&,          \
                                      const GroupElement&);

CONETYPE_INSTANTIATE(mpq_class)
CONETYPE_INSTANTIATE(double)

#undef CONETYPE_INSTANTIATE

}  // namespace conetype
