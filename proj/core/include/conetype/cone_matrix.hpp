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

#ifndef CONETYPE_CONE_MATRIX_HPP_
#define CONETYPE_CONE_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "conetype/cone_types.hpp"

namespace conetype {

// Square 0/1 matrix over the nonidentity cone types: entry (row, col) is 1
// when some successor of type col+1 has type row+1. Rows and columns are
// partitioned into length classes; block (i, j) has rows in class i and
// columns in class j, both 1-based.
class ConeMatrix {
 public:
  ConeMatrix() = default;
  // class_starts: 0-based first index of each class, followed by order.
  explicit ConeMatrix(std::vector<int> class_starts);

  int order() const noexcept { return n_; }
  int class_count() const noexcept { return static_cast<int>(starts_.size()) - 1; }
  const std::vector<int>& class_starts() const noexcept { return starts_; }
  int class_size(int i) const { return starts_[i] - starts_[i - 1]; }

  std::uint8_t operator()(int row, int col) const { return entries_[row * n_ + col]; }
  void set(int row, int col, std::uint8_t value);

  std::vector<std::vector<std::uint8_t>> block(int i, int j) const;
  bool block_is_zero(int i, int j) const;
  bool block_is_identity(int i, int j) const;

  std::vector<int> column_sums() const;
  std::vector<int> row_sums() const;
  // Bitset of 1-entries in a row, in 64-bit words.
  const std::vector<std::uint64_t>& row_bits(int row) const { return bits_[row]; }

  friend bool operator==(const ConeMatrix& a, const ConeMatrix& b) {
    return a.starts_ == b.starts_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  std::vector<int> starts_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

// From the suffix cascade.
ConeMatrix build_matrix(const ConeTypeTable& table);
// From oracle classification of every one-letter extension of each
// representative.
ConeMatrix build_matrix(const ConeTypeTable& table, const OracleClassifier& oracle);

struct DiffEntry {
  int row;  // 1-based cone-type ids
  int column;
  int computed;
  int reference;
  friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  bool empty() const noexcept { return entries.empty(); }
  std::string to_string() const;
};

// Entrywise comparison; throws DomainError on shape mismatch.
DiffReport compare_matrices(const ConeMatrix& computed, const ConeMatrix& reference);

struct PrimitivityStage {
  int power = 0;
  int rows = 0;  // leading rows required to be positive
  bool positive = false;
  // First zero entry (1-based row, column) when not positive.
  std::optional<std::pair<int, int>> first_zero;
};

struct PrimitivityCertificate {
  // Smallest k <= max_power with M^k > 0.
  std::optional<int> exponent;
  PrimitivityStage first_power;  // M itself, all rows
  std::vector<PrimitivityStage> stages;
  bool holds() const;
};

struct StageClaim {
  int power;
  int rows;
};

// Staged positivity claims for the genus-2 matrix: leading 8, 16, 32
// and 48 rows of M^2..M^5. Empty for other orders.
std::vector<StageClaim> default_stage_claims(int order);

// max_power <= 0 selects the Wielandt bound (n-1)^2 + 1.
PrimitivityCertificate primitivity_certificate(const ConeMatrix& m,
                                               const std::vector<StageClaim>& claims,
                                               int max_power = 0);
inline PrimitivityCertificate primitivity_certificate(const ConeMatrix& m) {
  return primitivity_certificate(m, default_stage_claims(m.order()));
}

struct PerronOptions {
  double tol = 1e-12;
  int max_iter = 100000;
  std::uint64_t seed = 1;
};

struct SpectralResult {
  double r = 0;
  double left_r = 0;
  std::vector<double> right_vector;  // max-norm 1
  std::vector<double> left_vector;   // max-norm 1
  double residual = 0;
  double left_residual = 0;
  int iterations = 0;
  std::vector<double> residual_history;
  // Max-norm distance between the normalised vectors of the all-ones
  // start and a random positive start.
  double restart_difference = 0;
  double restart_r = 0;
};

// Power iteration. Throws VerificationError without convergence.
SpectralResult perron(const ConeMatrix& m, const PerronOptions& options = {});

struct GrowthRow {
  int n = 0;
  mpz_class elements;  // |S(n)|
  mpz_class words;     // number of geodesic words of length n
  std::vector<mpz_class> per_type;  // elements of S(n) by cone type 1..N
};

// Sphere sizes from the automaton. Geodesic words obey w_{n+1} = M w_n;
// elements obey D u_{n+1} = M u_n where D holds the in-degrees of the
// types (two for half-relator types), since an element is reached once
// per last letter of its geodesics.
std::vector<GrowthRow> growth_counts(const ConeTypeTable& table, const ConeMatrix& m, int n_max);

}  // namespace conetype

#endif  // CONETYPE_CONE_MATRIX_HPP_
