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

#include "fsi/reference_data.hpp"

#include <array>
#include <numbers>

namespace fsi {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<TernaryReference, 25> kRows{{
    {2, 2, kPi / 4, kPi / 2, 160e-3, 0.93},
    {3, 1, kPi / 2, kPi, 160e-3, 0.97},
    {4, 0, kPi / 2, kPi, 40e-3, 1.35},
    {3, 3, 0.67, kPi / 2, 140e-3, 1.13},
    {4, 2, kPi / 2, kPi, 8e-3, 1.50},
    {5, 1, 2.32, 3.16, 5e-3, 1.55},
    {6, 0, kPi / 2, kPi, 48e-3, 1.30},
    {4, 4, 0.55, 1.2, 120e-3, 1.12},
    {5, 3, 1.2, kPi, 5e-3, 1.52},
    {6, 2, 0.6, kPi, 2e-3, 1.55},
    {7, 1, 0.66, kPi, 3e-3, 1.56},
    {8, 0, kPi / 2, kPi, 3e-3, 1.41},
    {5, 5, 0.42, kPi / 2, 96e-3, 1.20},
    {6, 4, 1.0, kPi, 5e-3, 1.54},
    {7, 3, 0.48, kPi, 3e-3, 1.56},
    {8, 2, 0.45, kPi, 24e-3, 1.40},
    {9, 1, 0.64, kPi, 0.04e-3, 1.58},
    {10, 0, kPi / 2, kPi, 0.68e-3, 1.57},
    {6, 6, 1.32, 2.8, 88e-3, 1.20},
    {7, 5, 1.32, 3.16, 4e-3, 1.54},
    {8, 4, 0.38, kPi, 2e-3, 1.56},
    {9, 3, 0.42, kPi, 0.07e-3, 1.58},
    {10, 2, 2.68, kPi, 0.23e-3, 1.58},
    {11, 1, 2.56, kPi, 0.066e-3, 1.58},
    {12, 0, 1.56, kPi, 0.2e-3, 1.58},
}};

}  // namespace

std::span<const TernaryReference> ternary_reference_table() { return kRows; }

}  // namespace fsi
