// Copyright 2026 The fuzzybit Authors
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

namespace fuzzybit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation (e.g. a 4x4 where a 2x2 is required).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain invariant: non-hermitian matrix, state outside the
/// Bloch ball, non-unit axis, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (state files, Borel-set expressions, CLI vectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzybit
