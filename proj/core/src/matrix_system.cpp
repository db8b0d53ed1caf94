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

#include "conetype/matrix_system.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace conetype {

std::string scalar_to_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

mpq_class parse_rational(const std::string& text) {
  auto dot = text.find('.');
  auto e = text.find_first_of("eE");
  if (dot == std::string::npos && e == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("invalid rational '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  // Decimal: exact value of the written digits.
  std::string mant = e == std::string::npos ? text : text.substr(0, e);
  long exp10 = 0;
  if (e != std::string::npos) {
    const std::string ex = text.substr(e + 1);
    auto [p, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), exp10);
    if (ec != std::errc() || p != ex.data() + ex.size()) {
      throw ParseError("invalid exponent in '" + text + "'", e + 1);
    }
  }
  if (dot != std::string::npos && dot < mant.size()) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num;
  if (mant.empty() || num.set_str(mant, 10) != 0) {
    throw ParseError("invalid number '" + text + "'");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

std::vector<AdmissiblePair> admissible_pairs(const ConeTypeTable& table) {
  const int n = table.size();
  std::vector<AdmissiblePair> out;
  std::vector<int> seen(static_cast<std::size_t>(n) * n, -1);
  for (ConeTypeId from = 1; from <= n; ++from) {
    for (Generator a : table.group().alphabet().ordered()) {
      auto to = table.successor(from, a);
      if (!to) continue;
      int& slot = seen[(*to - 1) * n + (from - 1)];
      if (slot >= 0) {
        throw VerificationError("two generators realise the transition " + std::to_string(from) +
                                " -> " + std::to_string(*to));
      }
      slot = a.index;
      out.push_back({*to, from, a});
    }
  }
  return out;
}

std::vector<int> dims_for(const ConeTypeTable& table, const DimsProfile& profile) {
  const int classes = static_cast<int>(table.class_offsets().size()) - 1;
  if (static_cast<int>(profile.per_class.size()) != classes) {
    throw DomainError("dims profile needs " + std::to_string(classes) + " entries");
  }
  std::vector<int> dims(table.size() + 1);
  for (int k = 0; k < classes; ++k) {
    if (profile.per_class[k] < 1) throw DomainError("dimensions must be at least 1");
    for (ConeTypeId id = table.class_offsets()[k]; id < table.class_offsets()[k + 1]; ++id) {
      dims[id] = profile.per_class[k];
    }
  }
  return dims;
}

template <class T>
MatrixSystem<T>::MatrixSystem(const ConeTypeTable& table, std::vector<int> dims)
    : table_(&table), dims_(std::move(dims)), pairs_(admissible_pairs(table)) {
  const int n = table.size();
  if (static_cast<int>(dims_.size()) != n + 1) throw DomainError("dims must cover ids 0..N");
  for (int c = 1; c <= n; ++c) {
    if (dims_[c] < 1) throw DomainError("dimension of type " + std::to_string(c) + " is < 1");
  }
  dims_[0] = 0;
  pair_lookup_.assign(static_cast<std::size_t>(n) * n, -1);
  blocks_.reserve(pairs_.size());
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    pair_lookup_[(pairs_[p].to - 1) * n + (pairs_[p].from - 1)] = static_cast<int>(p);
    blocks_.emplace_back(dims_[pairs_[p].to], dims_[pairs_[p].from]);
  }
}

template <class T>
int MatrixSystem<T>::pair_index(ConeTypeId to, ConeTypeId from) const {
  const int n = table_->size();
  if (to < 1 || from < 1 || to > n || from > n) return -1;
  return pair_lookup_[(to - 1) * n + (from - 1)];
}

template <class T>
const DenseMatrix<T>* MatrixSystem<T>::block(ConeTypeId to, ConeTypeId from) const {
  int p = pair_index(to, from);
  return p < 0 ? nullptr : &blocks_[p];
}

template <class T>
void MatrixSystem<T>::set_block(ConeTypeId to, ConeTypeId from, DenseMatrix<T> h) {
  int p = pair_index(to, from);
  if (p < 0) {
    throw DomainError("(" + std::to_string(to) + ", " + std::to_string(from) +
                      ") is not an admissible pair");
  }
  if (h.rows != dims_[to] || h.cols != dims_[from]) {
    throw DomainError("block shape does not match the dimensions of (" + std::to_string(to) +
                      ", " + std::to_string(from) + ")");
  }
  blocks_[p] = std::move(h);
}

template class MatrixSystem<mpq_class>;
template class MatrixSystem<double>;

RationalSystem random_system(const ConeTypeTable& table, const DimsProfile& profile,
                             std::uint64_t seed) {
  RationalSystem sys(table, dims_for(table, profile));
  std::mt19937_64 rng(seed);
  for (const AdmissiblePair& p : sys.pairs()) {
    DenseMatrix<mpq_class> h(sys.dim(p.to), sys.dim(p.from));
    for (auto& x : h.data) {
      long num = static_cast<long>(rng() % 7) - 3;
      unsigned long den = 1 + rng() % 4;
      x = mpq_class(num, den);
      x.canonicalize();
    }
    sys.set_block(p.to, p.from, std::move(h));
  }
  return sys;
}

RationalSystem ones_system(const ConeTypeTable& table) {
  const int classes = static_cast<int>(table.class_offsets().size()) - 1;
  RationalSystem sys(table, dims_for(table, DimsProfile::scalar(classes)));
  for (const AdmissiblePair& p : sys.pairs()) {
    DenseMatrix<mpq_class> h(1, 1);
    h(0, 0) = 1;
    sys.set_block(p.to, p.from, std::move(h));
  }
  return sys;
}

nlohmann::json system_to_json(const RationalSystem& sys) {
  nlohmann::json dims = nlohmann::json::object();
  for (ConeTypeId c = 1; c <= sys.type_count(); ++c) dims[std::to_string(c)] = sys.dim(c);
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t p = 0; p < sys.pairs().size(); ++p) {
    nlohmann::json entries = nlohmann::json::array();
    for (const mpq_class& x : sys.block_at(p).data) entries.push_back(x.get_str());
    blocks.push_back({{"from", sys.pairs()[p].from},
                      {"to", sys.pairs()[p].to},
                      {"entries", std::move(entries)}});
  }
  return {{"dims", std::move(dims)}, {"blocks", std::move(blocks)}};
}

RationalSystem system_from_json(const ConeTypeTable& table, const nlohmann::json& j) {
  try {
    std::vector<int> dims(table.size() + 1, 1);
    dims[0] = 0;
    if (j.contains("dims")) {
      for (auto& [key, value] : j.at("dims").items()) {
        int id = std::stoi(key);
        if (id < 1 || id > table.size()) throw ParseError("dims key out of range: " + key);
        dims[id] = value.get<int>();
      }
    }
    RationalSystem sys(table, dims);
    std::vector<char> seen(sys.pairs().size(), 0);
    for (const auto& b : j.at("blocks")) {
      const int from = b.at("from").get<int>();
      const int to = b.at("to").get<int>();
      const int p = sys.pair_index(to, from);
      if (p < 0) {
        throw ParseError("block (" + std::to_string(from) + " -> " + std::to_string(to) +
                             ") is not admissible");
      }
      if (seen[p]++) {
        throw ParseError("duplicate block (" + std::to_string(from) + " -> " + std::to_string(to) + ")");
      }
      DenseMatrix<mpq_class> h(sys.dim(to), sys.dim(from));
      const auto& entries = b.at("entries");
      if (entries.size() != h.data.size()) {
        throw ParseError("block (" + std::to_string(from) + " -> " + std::to_string(to) +
                             ") needs " + std::to_string(h.data.size()) + " entries");
      }
      for (std::size_t i = 0; i < h.data.size(); ++i) {
        const auto& e = entries[i];
        if (e.is_string()) {
          h.data[i] = parse_rational(e.get<std::string>());
        } else if (e.is_number_integer()) {
          h.data[i] = mpq_class(e.get<long>());
        } else if (e.is_number()) {
          h.data[i] = parse_rational(e.dump());
        } else {
          throw ParseError("block entries must be numbers or strings");
        }
      }
      sys.set_block(to, from, std::move(h));
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed system JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed system JSON: non-numeric dims key");
  }
}

}  // namespace conetype
