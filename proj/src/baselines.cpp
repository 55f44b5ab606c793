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

#include "fsi/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsi/errors.hpp"
#include "fsi/special.hpp"

namespace fsi {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) throw DomainError(std::string(what) + " must be nonnegative");
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p outside [0, 1]");
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double homodyne_error(double alpha) {
  require_nonnegative(alpha, "homodyne_error: alpha");
  return 0.5 * fsi::erfc(alpha / 2.0);
}

double dolinar_error(double alpha) {
  require_nonnegative(alpha, "dolinar_error: alpha");
  return 0.5 * (1.0 - std::sqrt(-std::expm1(-4.0 * alpha * alpha)));
}

double phase_eigenstate_error(double j) {
  if (!(j >= 0.0 && j <= 1.0)) throw DomainError("phase_eigenstate_error: j outside [0, 1]");
  return 0.5 - std::sqrt(j * (1.0 - j));
}

double holevo_capacity(double n_s) {
  require_nonnegative(n_s, "holevo_capacity: n_s");
  return xlog2x(1.0 + n_s) - xlog2x(n_s);
}

double binary_channel_capacity(double pe) {
  return 1.0 - binary_entropy(pe);
}

double ook_direct_detection_capacity(double n_s) {
  require_nonnegative(n_s, "ook_direct_detection_capacity: n_s");
  const double miss = std::exp(-n_s);
  const double click = 0.5 * (1.0 - miss);
  return std::max(0.0, binary_entropy(click) - 0.5 * binary_entropy(miss));
}

double pie(double capacity, double n_s) {
  if (!(n_s > 0.0)) throw DomainError("pie: n_s must be positive");
  return capacity / n_s;
}

}  // namespace fsi
