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

#include "conetype/alphabet.hpp"

#include <cctype>
#include <string>

#include "conetype/error.hpp"

namespace conetype {

Genus::Genus(int g) : g_(g) {
  if (g < 2 || g > 15) {
    throw DomainError("genus must lie in [2, 15], got " + std::to_string(g));
  }
}

Word::Word(std::initializer_list<int> indices) {
  letters_.reserve(indices.size());
  for (int i : indices) letters_.push_back(static_cast<char>(i));
}

Alphabet::Alphabet(Genus genus) : genus_(genus), rank_(genus.alphabet_size(), -1) {
  const int g = genus.value();
  for (int i = 0; i < g; ++i) {
    Generator a(2 * i), b(2 * i + 1);
    relator_.push_back(a);
    relator_.push_back(b);
    relator_.push_back(inverse(a));
    relator_.push_back(inverse(b));
  }
  // Walk the link of the base vertex: the edge following x_{i+1} is the
  // inverse of x_i, where x is the relator read cyclically.
  const int n = size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[relator_[i].index] = i;
  Generator cur = inverse(Generator(1));
  for (int k = 0; k < n; ++k) {
    rank_[cur.index] = k;
    ordered_.push_back(cur);
    int p = pos[cur.index];
    cur = inverse(relator_[(p + n - 1) % n]);
  }
}

Word Alphabet::inverse(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(inverse(w[i]));
  return out;
}

bool Alphabet::shortlex_less(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int ru = rank(u[i]), rv = rank(v[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

std::string Alphabet::format(Generator x) const {
  const int g = genus_.value();
  const bool inv = x.index >= 2 * g;
  const int base = inv ? x.index - 2 * g : x.index;
  if (g == 2) {
    char c = static_cast<char>('a' + base);
    return std::string(1, inv ? static_cast<char>(std::toupper(c)) : c);
  }
  std::string s(1, base % 2 == 0 ? 'a' : 'b');
  s += std::to_string(base / 2 + 1);
  if (inv) s += '\'';
  return s;
}

std::string Alphabet::format(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += format(w[i]);
  return s;
}

Word Alphabet::parse(std::string_view text) const {
  const int g = genus_.value();
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == '*') {
      ++i;
      continue;
    }
    if (g == 2) {
      int lower = std::tolower(static_cast<unsigned char>(ch));
      if (lower < 'a' || lower > 'd') {
        throw ParseError(std::string("unexpected character '") + ch + "'", i);
      }
      int idx = lower - 'a';
      if (std::isupper(static_cast<unsigned char>(ch))) idx += 4;
      w.push_back(Generator(idx));
      ++i;
      continue;
    }
    if (ch != 'a' && ch != 'b') {
      throw ParseError(std::string("expected 'a' or 'b', got '") + ch + "'", i);
    }
    const std::size_t start = i++;
    int k = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = 10 * k + (text[i] - '0');
      ++i;
      ++digits;
      if (k > g) break;
    }
    if (digits == 0 || k < 1 || k > g) {
      throw ParseError("generator index out of range for genus " + std::to_string(g), start);
    }
    int idx = 2 * (k - 1) + (ch == 'b' ? 1 : 0);
    if (i < text.size() && text[i] == '\'') {
      idx += 2 * g;
      ++i;
    }
    w.push_back(Generator(idx));
  }
  return w;
}

}  // namespace conetype
