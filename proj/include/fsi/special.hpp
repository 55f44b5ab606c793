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

// Special functions used by the interferometry kernels. Everything here is a
// template on the scalar type so the same code runs in double and in
// long double (the latter is what the tests use as an extended-precision
// reference).

#ifndef FSI_SPECIAL_HPP
#define FSI_SPECIAL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

#include "fsi/errors.hpp"

namespace fsi {

/// Largest total photon number 2j accepted by the factorial tables.
inline constexpr int kMaxTwoJ = 64;

namespace detail {

template <typename Scalar>
const std::array<Scalar, kMaxTwoJ + 1>& log_factorial_table() {
  static const std::array<Scalar, kMaxTwoJ + 1> table = [] {
    std::array<Scalar, kMaxTwoJ + 1> t{};
    t[0] = Scalar(0);
    for (int n = 1; n <= kMaxTwoJ; ++n) t[n] = t[n - 1] + std::log(Scalar(n));
    return t;
  }();
  return table;
}

}  // namespace detail

/// log(n!) for 0 <= n <= kMaxTwoJ, read from a table built on first use.
template <typename Scalar = double>
Scalar log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n > kMaxTwoJ) throw OverflowError("log_factorial: argument exceeds factorial table");
  return detail::log_factorial_table<Scalar>()[static_cast<std::size_t>(n)];
}

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
/// Requires a, b >= 0.
template <typename Scalar>
Scalar jacobi_polynomial(int n, int a, int b, Scalar x) {
  if (n < 0 || a < 0 || b < 0) throw DomainError("jacobi_polynomial: negative degree or parameter");
  if (n == 0) return Scalar(1);
  const Scalar A = Scalar(a);
  const Scalar B = Scalar(b);
  Scalar prev = Scalar(1);
  Scalar curr = (A + 1) + (A + B + 2) * (x - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    const Scalar K = Scalar(k);
    const Scalar s = 2 * K + A + B;
    const Scalar c1 = 2 * K * (K + A + B) * (s - 2);
    const Scalar c2 = (s - 1) * (s * (s - 2) * x + A * A - B * B);
    const Scalar c3 = 2 * (K + A - 1) * (K + B - 1) * s;
    const Scalar next = (c2 * curr - c3 * prev) / c1;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Legendre polynomial P_n(x) = P_n^{(0,0)}(x).
template <typename Scalar>
Scalar legendre_polynomial(int n, Scalar x) {
  return jacobi_polynomial<Scalar>(n, 0, 0, x);
}

namespace detail {

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n (2x^2)^n x / (2n+1)!!, all terms positive.
template <typename Scalar>
Scalar erf_series(Scalar x) {
  const Scalar two_x2 = 2 * x * x;
  Scalar term = x;
  Scalar sum = x;
  for (int n = 1; n < 500; ++n) {
    term *= two_x2 / Scalar(2 * n + 1);
    sum += term;
    if (term < sum * std::numeric_limits<Scalar>::epsilon()) break;
  }
  return 2 / std::sqrt(std::numbers::pi_v<Scalar>) * std::exp(-x * x) * sum;
}

// erfc(x) for x > 0 by modified Lentz evaluation of
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
template <typename Scalar>
Scalar erfc_continued_fraction(Scalar x) {
  const Scalar tiny = std::numeric_limits<Scalar>::min() * 1e10;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar f = x;
  Scalar c = x;
  Scalar d = 0;
  for (int n = 1; n < 5000; ++n) {
    const Scalar a = Scalar(n) / 2;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    const Scalar delta = c * d;
    f *= delta;
    if (std::abs(delta - 1) < eps) break;
  }
  return std::exp(-x * x) / std::sqrt(std::numbers::pi_v<Scalar>) / f;
}

inline constexpr double kErfSwitch = 2.5;

}  // namespace detail

/// Complementary error function.
template <typename Scalar>
Scalar erfc(Scalar x) {
  if (x < 0) return 2 - erfc(-x);
  if (x < Scalar(detail::kErfSwitch)) return 1 - detail::erf_series(x);
  return detail::erfc_continued_fraction(x);
}

/// Error function.
template <typename Scalar>
Scalar erf(Scalar x) {
  if (x < 0) return -erf(-x);
  if (x < Scalar(detail::kErfSwitch)) return detail::erf_series(x);
  return 1 - detail::erfc_continued_fraction(x);
}

}  // namespace fsi

#endif  // FSI_SPECIAL_HPP
