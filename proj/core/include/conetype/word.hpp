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

#ifndef CONETYPE_WORD_HPP_
#define CONETYPE_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>

namespace conetype {

// A letter of the symmetric generating set, encoded as a small integer.
struct Generator {
  std::uint8_t index = 0;

  constexpr Generator() = default;
  constexpr explicit Generator(int i) : index(static_cast<std::uint8_t>(i)) {}

  friend constexpr bool operator==(Generator, Generator) = default;
  friend constexpr auto operator<=>(Generator, Generator) = default;
};

// A finite sequence of generators stored as a flat byte string so that
// hashing and comparison stay cheap during exhaustive searches.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> indices);

  static Word from_raw(std::string raw) {
    Word w;
    w.letters_ = std::move(raw);
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Generator operator[](std::size_t i) const {
    return Generator(static_cast<std::uint8_t>(letters_[i]));
  }
  Generator front() const { return (*this)[0]; }
  Generator back() const { return (*this)[size() - 1]; }

  void push_back(Generator g) { letters_.push_back(static_cast<char>(g.index)); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& other) { letters_ += other.letters_; }
  void reserve(std::size_t n) { letters_.reserve(n); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    return from_raw(letters_.substr(pos, len));
  }
  // Replaces letters [pos, pos + len) with `replacement`.
  void replace(std::size_t pos, std::size_t len, const Word& replacement) {
    letters_.replace(pos, len, replacement.letters_);
  }

  std::string_view raw() const noexcept { return letters_; }

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend Word operator+(Word lhs, Generator g) {
    lhs.push_back(g);
    return lhs;
  }

  // Plain byte order; only for ordered containers. Use
  // Alphabet::shortlex_less for the group's canonical order.
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

}  // namespace conetype

template <>
struct std::hash<conetype::Word> {
  std::size_t operator()(const conetype::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.raw());
  }
};

#endif  // CONETYPE_WORD_HPP_
