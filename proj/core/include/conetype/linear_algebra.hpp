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

#ifndef CONETYPE_LINEAR_ALGEBRA_HPP_
#define CONETYPE_LINEAR_ALGEBRA_HPP_

#include <string>
#include <vector>

#include <gmpxx.h>

#include "conetype/error.hpp"

namespace conetype {

template <class T>
using Vector = std::vector<T>;

// Row-major dense matrix.
template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T(0)) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const {
    for (const T& x : data) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

template <class T>
Vector<T> operator*(const DenseMatrix<T>& a, const Vector<T>& v) {
  if (static_cast<int>(v.size()) != a.cols) throw DomainError("matrix-vector shape mismatch");
  Vector<T> out(a.rows, T(0));
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols != b.rows) throw DomainError("matrix-matrix shape mismatch");
  DenseMatrix<T> out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      if (a(r, k) == 0) continue;
      for (int c = 0; c < b.cols; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

template <class T>
void add_into(DenseMatrix<T>& acc, const DenseMatrix<T>& x) {
  if (acc.rows != x.rows || acc.cols != x.cols) throw DomainError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += x.data[i];
}

template <class T>
void add_into(Vector<T>& acc, const Vector<T>& x) {
  if (acc.size() != x.size()) throw DomainError("vector sum shape mismatch");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

template <class T>
Vector<T> scaled(const Vector<T>& v, const T& s) {
  Vector<T> out(v);
  for (T& x : out) x *= s;
  return out;
}

inline std::string scalar_to_string(const mpq_class& q) { return q.get_str(); }
std::string scalar_to_string(double x);

// Accepts integers, "p/q" and decimal notation.
mpq_class parse_rational(const std::string& text);

template <class To>
To convert_scalar(const mpq_class& q);
template <>
inline mpq_class convert_scalar<mpq_class>(const mpq_class& q) {
  return q;
}
template <>
inline double convert_scalar<double>(const mpq_class& q) {
  return q.get_d();
}

}  // namespace conetype

#endif  // CONETYPE_LINEAR_ALGEBRA_HPP_
