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

#ifndef CONETYPE_ERROR_HPP_
#define CONETYPE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conetype {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (word syntax, JSON, fixture files).
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos);
  // Offset of the offending character, or npos when not applicable.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A computation would exceed a configured resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An input violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A check that should hold by construction failed; the message names the
// offending data.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace conetype

#endif  // CONETYPE_ERROR_HPP_
