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

// Schwinger-representation engine for a Mach-Zehnder interferometer fed with
// two Fock states.
//
// The input |n_a>|n_b> is the spin state |j mu> with j = (n_a + n_b)/2 and
// mu = (n_a - n_b)/2. The interferometer rotates the spin about y by theta,
// so the probability of observing output projection mu' is d^j_{mu',mu}(theta)^2.
// Spin quantum numbers are kept as doubled integers (HalfInt) so all
// bookkeeping stays exact for odd photon numbers.

#ifndef FSI_SPIN_CORE_HPP
#define FSI_SPIN_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "fsi/errors.hpp"
#include "fsi/special.hpp"

namespace fsi {

/// An integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int integer) : twice_(2 * integer) {}
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

/// Photon numbers at the two interferometer inputs.
struct PhotonPair {
  int n_a = 0;
  int n_b = 0;
  friend bool operator==(const PhotonPair&, const PhotonPair&) = default;
};

/// Interferometer input |j mu>, equivalently |n_a>_a |n_b>_b.
class SpinState {
 public:
  static SpinState from_photons(int n_a, int n_b);
  static SpinState from_photons(PhotonPair p) { return from_photons(p.n_a, p.n_b); }
  static SpinState from_spin(HalfInt j, HalfInt mu);

  HalfInt j() const { return HalfInt::from_twice(two_j_); }
  HalfInt mu() const { return HalfInt::from_twice(two_mu_); }
  int two_j() const { return two_j_; }
  int two_mu() const { return two_mu_; }
  int n_a() const { return (two_j_ + two_mu_) / 2; }
  int n_b() const { return (two_j_ - two_mu_) / 2; }
  PhotonPair photons() const { return {n_a(), n_b()}; }
  /// Number of distinguishable outcomes, 2j + 1.
  int outcome_count() const { return two_j_ + 1; }

  /// "|n_a>|n_b>"
  std::string label() const;
  /// "|j m>_z" with half-integers written as fractions.
  std::string spin_label() const;

  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  SpinState(int two_j, int two_mu) : two_j_(two_j), two_mu_(two_mu) {}
  int two_j_ = 0;
  int two_mu_ = 0;
};

/// Formats a half-integer as "3", "-1/2", ...
std::string to_string(HalfInt h);

/// Photon-difference statistics at one phase. Entry k corresponds to
/// mu' = -j + k, i.e. to the output partition |j + mu'>_a |j - mu'>_b.
struct OutcomeDistribution {
  HalfInt j;
  Eigen::VectorXd probs;
  /// |sum - 1| before renormalization.
  double residual = 0.0;

  HalfInt mu_prime(Eigen::Index k) const { return HalfInt::from_twice(2 * static_cast<int>(k) - j.twice()); }
  double at(HalfInt mu_p) const { return probs((mu_p.twice() + j.twice()) / 2); }
};

/// Residuals above this trigger a numerical-health warning.
inline constexpr double kHealthResidual = 1e-9;

/// Count of numerical-health warnings raised since start (or the last reset).
std::uint64_t health_warning_count();
void reset_health_warnings();
void note_health_warning(double residual);

namespace detail {

inline void check_projection(HalfInt j, HalfInt m) {
  if (j.twice() < 0) throw DomainError("wigner_d: negative j");
  if (j.twice() > kMaxTwoJ) throw OverflowError("wigner_d: 2j exceeds the factorial table");
  if (m > j || m < -j) throw DomainError("wigner_d: |projection| > j");
  if ((j.twice() - m.twice()) % 2 != 0) throw DomainError("wigner_d: j - projection is not an integer");
}

// Canonical region mu >= |mu'|: a = mu - mu' >= 0, b = mu + mu' >= 0.
template <typename Scalar>
Scalar wigner_d_canonical(int two_j, int two_mp, int two_m, Scalar theta) {
  const int j_plus_m = (two_j + two_m) / 2;
  const int j_minus_m = (two_j - two_m) / 2;
  const int j_plus_mp = (two_j + two_mp) / 2;
  const int j_minus_mp = (two_j - two_mp) / 2;
  const int a = (two_m - two_mp) / 2;
  const int b = (two_m + two_mp) / 2;
  const Scalar log_ratio = (log_factorial<Scalar>(j_plus_m) + log_factorial<Scalar>(j_minus_m) -
                            log_factorial<Scalar>(j_plus_mp) - log_factorial<Scalar>(j_minus_mp)) / 2;
  const Scalar half = theta / 2;
  const Scalar s = std::sin(half);
  const Scalar c = std::cos(half);
  const Scalar pa = a == 0 ? Scalar(1) : std::pow(s, a);
  const Scalar pb = b == 0 ? Scalar(1) : std::pow(c, b);
  return std::exp(log_ratio) * pa * pb * jacobi_polynomial<Scalar>(j_minus_m, a, b, std::cos(theta));
}

}  // namespace detail

/// Wigner small-d matrix element d^j_{mu',mu}(theta) = <j mu'| exp(-i theta J_y) |j mu>.
///
/// Evaluated through the Jacobi-polynomial form in the region mu >= |mu'| and
/// mapped there with d_{mu',mu} = (-1)^{mu'-mu} d_{mu,mu'} = d_{-mu,-mu'}.
/// Only squares of these elements are physical, so the rotation sense used by
/// the interferometer does not matter for any probability.
template <typename Scalar = double>
Scalar wigner_d(HalfInt j, HalfInt mu_p, HalfInt mu, Scalar theta) {
  detail::check_projection(j, mu_p);
  detail::check_projection(j, mu);
  int mp = mu_p.twice();
  int m = mu.twice();
  Scalar sign = Scalar(1);
  if (std::abs(mp) > std::abs(m) || (std::abs(mp) == std::abs(m) && m < 0 && mp != m)) {
    // Bring the larger |projection| into the column slot.
    if (mp >= 0) {
      // d_{mu',mu} = (-1)^{mu'-mu} d_{mu,mu'}
      if (((mp - m) / 2) % 2 != 0) sign = -sign;
      std::swap(mp, m);
    } else {
      // d_{mu',mu} = d_{-mu,-mu'}
      const int new_mp = -m;
      m = -mp;
      mp = new_mp;
    }
  } else if (m < 0) {
    // mu <= -|mu'|: d_{mu',mu} = (-1)^{mu'-mu} d_{-mu',-mu}
    if (((mp - m) / 2) % 2 != 0) sign = -sign;
    const int new_mp = -mp;
    m = -m;
    mp = new_mp;
  }
  return sign * detail::wigner_d_canonical<Scalar>(j.twice(), mp, m, theta);
}

/// The full (2j+1) x (2j+1) rotation matrix; row k is mu' = -j + k, column l is mu = -j + l.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> wigner_d_matrix(HalfInt j, Scalar theta) {
  const int n = j.twice() + 1;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      d(r, c) = wigner_d<Scalar>(j, HalfInt::from_twice(2 * r - j.twice()), HalfInt::from_twice(2 * c - j.twice()), theta);
    }
  }
  return d;
}

/// Probability of each output photon difference for input `state` at phase `theta`.
OutcomeDistribution outcome_distribution(const SpinState& state, double theta);

/// <N_a - N_b> at the output: (n_a - n_b) cos(theta).
double mean_photon_difference(const SpinState& state, double theta);

/// Standard deviation of N_a - N_b at the output: |sin theta| sqrt(2[j(j+1) - mu^2]).
double std_photon_difference(const SpinState& state, double theta);

/// Propagated phase error [j(j+1)/(2 mu^2) - 1/2]^{1/2}, independent of theta.
/// Throws BalancedInputError when n_a == n_b.
double phase_error_estimate(const SpinState& state);

}  // namespace fsi

#endif  // FSI_SPIN_CORE_HPP
