// Copyright 2026 The swgmm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace swgmm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: dimension mismatch, out-of-range parameter, empty input.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A model that violates the GmmModel invariants.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

/// Mixture weights with no positive mass left after clipping.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV or JSON input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Non-finite values produced during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace swgmm
