// Copyright 2026 The boundent Authors
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

namespace boundent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator dimensions are unsupported or do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (Hermiticity, trace, positivity, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A linear system does not determine all requested parameters.
class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, int deficiency)
      : Error(what), deficiency_(deficiency) {}

  /// Dimension of the unresolved parameter subspace.
  int deficiency() const noexcept { return deficiency_; }

 private:
  int deficiency_;
};

}  // namespace boundent
