// Copyright 2026 The bcq Authors
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

#ifndef BCQ_ERRORS_HPP
#define BCQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcq {

/// Input outside the domain of an operation (invalid parameters, malformed weights).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated series, product or quadrature did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold by construction failed (for example a
/// nonzero remainder in an exact division).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two eigenvalues of the difference operator coincide, so the triangular
/// construction is not available.
class EigenvalueCollision : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bcq

#endif  // BCQ_ERRORS_HPP
