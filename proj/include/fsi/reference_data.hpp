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

// Reference ternary-discrimination optima for every Fock input with
// 2 <= j <= 6, used to annotate computed results.

#ifndef FSI_REFERENCE_DATA_HPP
#define FSI_REFERENCE_DATA_HPP

#include <span>

namespace fsi {

struct TernaryReference {
  int n_a;
  int n_b;
  double theta1;
  double theta2;
  double pe;
  double mi;
};

/// 25 rows ordered by j, then by m = 0..j.
std::span<const TernaryReference> ternary_reference_table();

/// Relative and absolute P_e tolerance, MI tolerance (bits), phase tolerance (rad)
/// used when comparing against the reference rows.
inline constexpr double kReferencePeRelTol = 0.20;
inline constexpr double kReferencePeAbsTol = 5e-4;
inline constexpr double kReferenceMiTol = 0.03;
inline constexpr double kReferencePhaseTol = 0.05;

}  // namespace fsi

#endif  // FSI_REFERENCE_DATA_HPP
