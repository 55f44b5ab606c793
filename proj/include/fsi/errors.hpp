// Copyright 2026 The fsi Authors
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

#ifndef FSI_ERRORS_HPP
#define FSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsi {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Photon number beyond the size of the precomputed tables.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The propagated phase error is undefined for n_a == n_b.
class BalancedInputError : public DomainError {
 public:
  BalancedInputError() : DomainError("phase error estimate undefined for balanced input (n_a == n_b)") {}
};

/// No zero-error phase exists in (0, pi].
class NoZeroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsi

#endif  // FSI_ERRORS_HPP
