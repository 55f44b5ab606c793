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

// Searches over interferometer phases: binary error sweeps, the smallest
// zero-error phase, the power-law scaling fit of that phase with photon number,
// and ternary (0, theta1, theta2) error surfaces with grid-plus-refinement
// optimization.

#ifndef FSI_PHASE_SEARCH_HPP
#define FSI_PHASE_SEARCH_HPP

#include <Eigen/Dense>

#include <vector>

#include "fsi/discrimination.hpp"
#include "fsi/spin_core.hpp"

namespace fsi {

/// P_e values at or below this are treated as exact zeros.
inline constexpr double kZeroErrorTol = 1e-12;

/// Binary {0, theta} discrimination, uniform priors, over a phase grid.
struct SweepResult {
  Eigen::VectorXd thetas;
  Eigen::VectorXd pe;
  Eigen::VectorXd mi;
};

/// Uniform grid k pi / n, k = 1..n, with n = ceil(pi / resolution). The grid
/// always contains pi, and pi/2 whenever n is even.
Eigen::VectorXd binary_grid(double resolution);

/// resolution must lie in (0, pi/16].
SweepResult binary_sweep(const SpinState& state, double resolution = 1e-3);

/// Closed form of the binary ML error against theta_1 = 0: d^j_{mu,mu}(theta)^2 / 2.
double binary_error_closed_form(const SpinState& state, double theta);

/// Smallest theta in (0, pi] at which binary discrimination against 0 is
/// error free. Zeros of d^j_{mu,mu} are bracketed on a 1e-3 rad grid and bisected
/// to below 1e-9 rad. Throws NoZeroError when there is none.
double smallest_optimum_phase(const SpinState& state, double zero_tol = kZeroErrorTol);

/// y = amplitude * x^exponent fitted by unweighted least squares in log-log space.
struct PowerLawFit {
  double amplitude = 0.0;
  double exponent = 0.0;
  double amplitude_se = 0.0;
  double exponent_se = 0.0;
};

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// Fit of the smallest optimum phase against total photon number 2j.
PowerLawFit fit_sop_scaling(const std::vector<int>& two_j, const std::vector<double>& sop);

/// Upper limit of ternary phase searches (rad).
inline constexpr double kTernaryMaxTheta = 3.2;

/// P_e of {0, theta1, theta2}, uniform priors, on the grid theta_k = k * resolution.
/// Only theta1 < theta2 is evaluated; pe(a, b) for a >= b is NaN.
struct TernarySurface {
  Eigen::VectorXd thetas;
  Eigen::MatrixXd pe;
};

TernarySurface ternary_surface(const SpinState& state, double resolution = 5e-3,
                               double max_theta = kTernaryMaxTheta, unsigned threads = 1);

struct TernarySearchOptions {
  double coarse = 5e-3;
  double tolerance = 1e-6;
  double max_theta = kTernaryMaxTheta;
  /// Number of grid local minima handed to the local refinement.
  int candidates = 8;
  unsigned threads = 1;
};

struct TernaryOptimum {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double pe = 0.0;
  double mi = 0.0;
  /// Objective at the best coarse-grid point (P_e, or -MI for the MI search).
  double grid_objective = 0.0;
};

/// Error and information of the ML decoder for {0, theta1, theta2}, uniform priors.
DiscriminationSummary ternary_summary(const SpinState& state, double theta1, double theta2);

/// Minimizes P_e over 0 < theta1 < theta2 <= max_theta. Results within 1e-9 of
/// each other are resolved toward the lexicographically smallest (theta1, theta2).
TernaryOptimum ternary_optimize(const SpinState& state, const TernarySearchOptions& options = {});

/// Maximizes mutual information over the same domain; ties go to lower P_e.
TernaryOptimum ternary_maximize_information(const SpinState& state, const TernarySearchOptions& options = {});

}  // namespace fsi

#endif  // FSI_PHASE_SEARCH_HPP
