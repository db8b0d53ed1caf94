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

#include "conetype/cone_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "conetype/error.hpp"

namespace conetype {

ConeMatrix::ConeMatrix(std::vector<int> class_starts) : starts_(std::move(class_starts)) {
  if (starts_.size() < 2 || starts_.front() != 0 || !std::is_sorted(starts_.begin(), starts_.end())) {
    throw DomainError("invalid class partition");
  }
  n_ = starts_.back();
  entries_.assign(static_cast<std::size_t>(n_) * n_, 0);
  bits_.assign(n_, std::vector<std::uint64_t>((n_ + 63) / 64, 0));
}

void ConeMatrix::set(int row, int col, std::uint8_t value) {
  if (value > 1) throw DomainError("cone matrix entries are 0 or 1");
  entries_[row * n_ + col] = value;
  std::uint64_t bit = std::uint64_t{1} << (col % 64);
  if (value) {
    bits_[row][col / 64] |= bit;
  } else {
    bits_[row][col / 64] &= ~bit;
  }
}

std::vector<std::vector<std::uint8_t>> ConeMatrix::block(int i, int j) const {
  std::vector<std::vector<std::uint8_t>> b;
  for (int r = starts_[i - 1]; r < starts_[i]; ++r) {
    b.emplace_back();
    for (int c = starts_[j - 1]; c < starts_[j]; ++c) b.back().push_back((*this)(r, c));
  }
  return b;
}

bool ConeMatrix::block_is_zero(int i, int j) const {
  for (int r = starts_[i - 1]; r < starts_[i]; ++r) {
    for (int c = starts_[j - 1]; c < starts_[j]; ++c) {
      if ((*this)(r, c)) return false;
    }
  }
  return true;
}

bool ConeMatrix::block_is_identity(int i, int j) const {
  if (class_size(i) != class_size(j)) return false;
  for (int r = 0; r < class_size(i); ++r) {
    for (int c = 0; c < class_size(j); ++c) {
      if ((*this)(starts_[i - 1] + r, starts_[j - 1] + c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

std::vector<int> ConeMatrix::column_sums() const {
  std::vector<int> s(n_, 0);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) s[c] += (*this)(r, c);
  }
  return s;
}

std::vector<int> ConeMatrix::row_sums() const {
  std::vector<int> s(n_, 0);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) s[r] += (*this)(r, c);
  }
  return s;
}

namespace {

ConeMatrix empty_for(const ConeTypeTable& table) {
  std::vector<int> starts;
  for (ConeTypeId id : table.class_offsets()) starts.push_back(id - 1);
  return ConeMatrix(std::move(starts));
}

}  // namespace

ConeMatrix build_matrix(const ConeTypeTable& table) {
  ConeMatrix m = empty_for(table);
  for (ConeTypeId c = 1; c <= table.size(); ++c) {
    for (Generator a : table.group().alphabet().ordered()) {
      if (auto s = table.successor(c, a)) m.set(*s - 1, c - 1, 1);
    }
  }
  return m;
}

ConeMatrix build_matrix(const ConeTypeTable& table, const OracleClassifier& oracle) {
  const SurfaceGroup& group = table.group();
  ConeMatrix m = empty_for(table);
  for (ConeTypeId c = 1; c <= table.size(); ++c) {
    GroupElement z = group.normal_form(table.representative(c));
    for (Generator a : group.alphabet().ordered()) {
      if (!group.extends(z, a)) continue;
      ConeTypeId s = oracle.classify(group.multiply(z, a));
      m.set(s - 1, c - 1, 1);
    }
  }
  return m;
}

std::string DiffReport::to_string() const {
  std::ostringstream os;
  if (entries.empty()) {
    os << "no differences\n";
    return os.str();
  }
  os << entries.size() << " difference(s) (row, column, computed, reference):\n";
  for (const DiffEntry& e : entries) {
    os << "  (" << e.row << ", " << e.column << ") " << e.computed << " " << e.reference << "\n";
  }
  return os.str();
}

DiffReport compare_matrices(const ConeMatrix& computed, const ConeMatrix& reference) {
  if (computed.order() != reference.order()) throw DomainError("matrix orders differ");
  DiffReport report;
  for (int r = 0; r < computed.order(); ++r) {
    for (int c = 0; c < computed.order(); ++c) {
      if (computed(r, c) != reference(r, c)) {
        report.entries.push_back({r + 1, c + 1, computed(r, c), reference(r, c)});
      }
    }
  }
  return report;
}

bool PrimitivityCertificate::holds() const {
  if (!exponent) return false;
  return std::all_of(stages.begin(), stages.end(),
                     [](const PrimitivityStage& s) { return s.positive; });
}

std::vector<StageClaim> default_stage_claims(int order) {
  if (order != 48) return {};
  return {{2, 8}, {3, 16}, {4, 32}, {5, 48}};
}

namespace {

using Counts = std::vector<std::uint64_t>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  return __builtin_add_overflow(a, b, &s) ? kSaturated : s;
}

// P <- M P, saturating.
Counts step(const ConeMatrix& m, const Counts& p) {
  const int n = m.order();
  Counts out(p.size(), 0);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      if (!m(r, k)) continue;
      for (int c = 0; c < n; ++c) out[r * n + c] = sat_add(out[r * n + c], p[k * n + c]);
    }
  }
  return out;
}

PrimitivityStage check_rows(const Counts& p, int n, int power, int rows) {
  PrimitivityStage st{power, rows, true, std::nullopt};
  for (int r = 0; r < rows && st.positive; ++r) {
    for (int c = 0; c < n; ++c) {
      if (p[r * n + c] == 0) {
        st.positive = false;
        st.first_zero = std::make_pair(r + 1, c + 1);
        break;
      }
    }
  }
  return st;
}

}  // namespace

PrimitivityCertificate primitivity_certificate(const ConeMatrix& m,
                                               const std::vector<StageClaim>& claims,
                                               int max_power) {
  const int n = m.order();
  if (max_power <= 0) max_power = (n - 1) * (n - 1) + 1;
  int needed = max_power;
  for (const StageClaim& s : claims) {
    if (s.rows > n || s.power < 1) throw DomainError("stage claim out of range");
    needed = std::max(needed, s.power);
  }
  PrimitivityCertificate cert;
  Counts p(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) p[r * n + c] = m(r, c);
  }
  std::vector<std::optional<PrimitivityStage>> staged(claims.size());
  for (int k = 1; k <= needed; ++k) {
    if (k > 1) p = step(m, p);
    if (k == 1) cert.first_power = check_rows(p, n, 1, n);
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (claims[i].power == k) staged[i] = check_rows(p, n, k, claims[i].rows);
    }
    if (!cert.exponent && k <= max_power && check_rows(p, n, k, n).positive) cert.exponent = k;
    bool stages_done = std::all_of(staged.begin(), staged.end(), [](auto& s) { return s.has_value(); });
    if (cert.exponent && stages_done) break;
  }
  for (auto& s : staged) cert.stages.push_back(*s);
  return cert;
}

namespace {

std::vector<double> apply(const ConeMatrix& m, const std::vector<double>& v, bool transpose) {
  const int n = m.order();
  std::vector<double> out(n, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (m(r, c)) {
        if (transpose) {
          out[c] += v[r];
        } else {
          out[r] += v[c];
        }
      }
    }
  }
  return out;
}

double max_abs(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

struct Iteration {
  double lambda = 0;
  std::vector<double> vector;
  double residual = 0;
  int iterations = 0;
  std::vector<double> history;
};

Iteration iterate(const ConeMatrix& m, std::vector<double> v, bool transpose,
                  const PerronOptions& opt) {
  Iteration it;
  double norm = max_abs(v);
  for (double& x : v) x /= norm;
  for (int k = 1; k <= opt.max_iter; ++k) {
    std::vector<double> w = apply(m, v, transpose);
    double lambda = max_abs(w);
    if (lambda == 0) throw VerificationError("power iteration reached the zero vector");
    double res = 0;
    for (std::size_t i = 0; i < w.size(); ++i) res = std::max(res, std::abs(w[i] - lambda * v[i]));
    it.history.push_back(res);
    it.iterations = k;
    if (res <= opt.tol) {
      it.lambda = lambda;
      it.residual = res;
      it.vector = std::move(v);
      return it;
    }
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / lambda;
  }
  throw VerificationError("power iteration did not reach tolerance within " +
                          std::to_string(opt.max_iter) + " iterations");
}

}  // namespace

SpectralResult perron(const ConeMatrix& m, const PerronOptions& options) {
  const int n = m.order();
  Iteration right = iterate(m, std::vector<double>(n, 1.0), false, options);
  Iteration left = iterate(m, std::vector<double>(n, 1.0), true, options);
  std::mt19937_64 rng(options.seed);
  std::vector<double> start(n);
  for (double& x : start) x = 0.5 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
  Iteration again = iterate(m, start, false, options);

  SpectralResult res;
  res.r = right.lambda;
  res.left_r = left.lambda;
  res.residual = right.residual;
  res.left_residual = left.residual;
  res.iterations = right.iterations;
  res.residual_history = std::move(right.history);
  res.right_vector = std::move(right.vector);
  res.left_vector = std::move(left.vector);
  res.restart_r = again.lambda;
  for (int i = 0; i < n; ++i) {
    res.restart_difference =
        std::max(res.restart_difference, std::abs(res.right_vector[i] - again.vector[i]));
  }
  return res;
}

std::vector<GrowthRow> growth_counts(const ConeTypeTable& table, const ConeMatrix& m, int n_max) {
  const int n = m.order();
  if (n != table.size()) throw DomainError("matrix order does not match the table");
  std::vector<GrowthRow> rows;
  GrowthRow zero;
  zero.n = 0;
  zero.elements = 1;
  zero.words = 1;
  zero.per_type.assign(n, 0);
  rows.push_back(zero);
  if (n_max < 1) return rows;

  std::vector<mpz_class> u(n, 0), w(n, 0);
  for (ConeTypeId id = table.class_offsets()[0]; id < table.class_offsets()[1]; ++id) {
    u[id - 1] = 1;
    w[id - 1] = 1;
  }
  for (int k = 1; k <= n_max; ++k) {
    if (k > 1) {
      std::vector<mpz_class> nu(n, 0), nw(n, 0);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if (!m(r, c)) continue;
          nu[r] += u[c];
          nw[r] += w[c];
        }
        const int d = table.in_degree(r + 1);
        if (d <= 0 || !mpz_divisible_ui_p(nu[r].get_mpz_t(), static_cast<unsigned long>(d))) {
          throw VerificationError("incoming edge count of type " + std::to_string(r + 1) +
                                  " is not a multiple of its in-degree");
        }
        nu[r] /= d;
      }
      u = std::move(nu);
      w = std::move(nw);
    }
    GrowthRow row;
    row.n = k;
    row.per_type = u;
    for (int i = 0; i < n; ++i) {
      row.elements += u[i];
      row.words += w[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace conetype
