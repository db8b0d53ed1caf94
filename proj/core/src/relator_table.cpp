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

#include "conetype/relator_table.hpp"

#include <algorithm>

#include "conetype/error.hpp"

namespace conetype {

RelatorTable::RelatorTable(const Alphabet& alphabet)
    : alphabet_(&alphabet), n_(alphabet.genus().relator_length()) {
  const Word& r = alphabet.relator();
  const Word ri = alphabet.inverse(r);
  for (const Word* base : {&r, &ri}) {
    for (int i = 0; i < n_; ++i) {
      perms_.push_back(base->subword(i) + base->subword(0, i));
    }
  }
  for (int d = 0; d < 2; ++d) {
    const Word& base = d == 0 ? r : ri;
    next_[d].resize(n_);
    for (int i = 0; i < n_; ++i) next_[d][base[i].index] = base[(i + 1) % n_];
  }
  for (int x = 0; x < n_; ++x) {
    if (next_[0][x] == next_[1][x]) {
      throw VerificationError("relator cycles share an edge");
    }
  }
}

std::optional<int> RelatorTable::piece_direction(const Word& w) const {
  if (w.empty() || static_cast<int>(w.size()) > n_) return std::nullopt;
  for (int d = 0; d < 2; ++d) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < w.size() && ok; ++i) ok = next(d, w[i]) == w[i + 1];
    if (ok) return d;
  }
  return std::nullopt;
}

bool RelatorTable::contains(const Word& w) const {
  return static_cast<int>(w.size()) <= n_ / 2 && is_piece(w);
}

Word RelatorTable::complement(const Word& w) const {
  auto d = piece_direction(w);
  if (!d) throw DomainError("complement of a word that is not a relator piece");
  Word out;
  Generator cur = w.back();
  for (int k = static_cast<int>(w.size()); k < n_; ++k) {
    cur = next(*d, cur);
    out.push_back(cur);
  }
  return out;
}

Word RelatorTable::twin(const Word& q) const {
  if (static_cast<int>(q.size()) != n_ / 2 || !contains(q)) {
    throw DomainError("twin requires a member of R of length " + std::to_string(n_ / 2));
  }
  return relator_replacement(q);
}

Word RelatorTable::piece(Generator x, int direction, int len) const {
  Word out;
  out.reserve(len);
  for (int k = 0; k < len; ++k) {
    out.push_back(x);
    x = next(direction, x);
  }
  return out;
}

void RelatorTable::runs(const Word& w, std::array<std::vector<int>, 2>& run) const {
  const std::size_t m = w.size();
  for (int d = 0; d < 2; ++d) {
    run[d].assign(m, 1);
    for (std::size_t i = m; i-- > 1;) {
      if (next(d, w[i - 1]) == w[i]) run[d][i - 1] = std::min(n_, run[d][i] + 1);
    }
  }
}

}  // namespace conetype
