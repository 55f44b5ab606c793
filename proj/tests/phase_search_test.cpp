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


#include "fsi/phase_search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"

namespace fsi {
namespace {

using std::numbers::pi;

double sop(int n_a, int n_b) { return smallest_optimum_phase(SpinState::from_photons(n_a, n_b)); }

// Ternary ML error from the matrix-exponential rotation, independent of wigner_d.
double ternary_error_oracle(const SpinState& s, double t1, double t2) {
  const int col = (s.two_mu() + s.two_j()) / 2;
  Eigen::MatrixXd table(3, s.two_j() + 1);
  table.row(0) = testing::rotation_by_exponential(s.two_j(), 0.0).col(col).cwiseAbs2().transpose();
  table.row(1) = testing::rotation_by_exponential(s.two_j(), t1).col(col).cwiseAbs2().transpose();
  table.row(2) = testing::rotation_by_exponential(s.two_j(), t2).col(col).cwiseAbs2().transpose();
  return 1.0 - table.colwise().maxCoeff().sum() / 3.0;
}

TEST(BinaryGridTest, ContainsLandmarks) {
  const Eigen::VectorXd g = binary_grid(1e-3);
  EXPECT_EQ(g(g.size() - 1), pi);
  EXPECT_GT(g(0), 0.0);
  EXPECT_LE(g(1) - g(0), 1e-3);
  EXPECT_TRUE((g.array() == pi / 2).any());
  EXPECT_THROW(binary_grid(0.0), DomainError);
  EXPECT_THROW(binary_grid(0.3), DomainError);
}

TEST(BinarySweepTest, FirstZeros) {
  auto first_zero = [](int na, int nb) {
    const SweepResult r = binary_sweep(SpinState::from_photons(na, nb));
    for (Eigen::Index k = 0; k < r.pe.size(); ++k) {
      if (r.pe(k) <= kZeroErrorTol) return r.thetas(k);
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  EXPECT_NEAR(first_zero(1, 1), pi / 2, 1e-12);
  // The m = j zero at pi is of order 4j, so P_e dips below 1e-12 one or two grid points early.
  EXPECT_NEAR(first_zero(2, 0), pi, 5e-3);
}

TEST(BinarySweepTest, ApproachesHalfNearZero) {
  for (int tj = 1; tj <= 10; ++tj) {
    const SweepResult r = binary_sweep(SpinState::from_photons(tj, 0));
    EXPECT_NEAR(r.pe(0), 0.5, 1e-4 * tj * tj);
    EXPECT_LT(r.mi(0), 1e-3);
  }
}

TEST(BinarySweepTest, MatchesClosedForm) {
  for (int tj = 0; tj <= 10; ++tj) {
    for (int na = 0; na <= tj; ++na) {
      const SpinState s = SpinState::from_photons(na, tj - na);
      const SweepResult r = binary_sweep(s, 1e-2);
      ASSERT_EQ(r.pe.size(), r.thetas.size());
      ASSERT_EQ(r.mi.size(), r.thetas.size());
      for (Eigen::Index k = 0; k < r.thetas.size(); ++k) {
        const double d = wigner_d(s.j(), s.mu(), s.mu(), r.thetas(k));
        EXPECT_NEAR(r.pe(k), 0.5 * d * d, 1e-12);
        EXPECT_NEAR(r.pe(k), binary_error_closed_form(s, r.thetas(k)), 1e-12);
        EXPECT_GE(r.mi(k), 0.0);
        EXPECT_LE(r.mi(k), 1.0 + 1e-12);
      }
    }
  }
}

TEST(BinarySweepTest, ContinuousAndFinite) {
  const double res = 1e-3;
  for (int tj = 1; tj <= 12; ++tj) {
    for (int na = 0; na <= tj; ++na) {
      const SweepResult r = binary_sweep(SpinState::from_photons(na, tj - na), res);
      EXPECT_FALSE(r.pe.hasNaN());
      EXPECT_FALSE(r.mi.hasNaN());
      const double jump = (r.pe.tail(r.pe.size() - 1) - r.pe.head(r.pe.size() - 1)).cwiseAbs().maxCoeff();
      EXPECT_LT(jump, 10 * res * tj);
    }
  }
}

TEST(SmallestOptimumPhaseTest, Examples) {
  EXPECT_NEAR(sop(1, 1), pi / 2, 1e-9);
  EXPECT_NEAR(sop(2, 2), std::acos(1 / std::sqrt(3.0)), 1e-9);
  EXPECT_NEAR(sop(4, 0), pi, 1e-9);
  for (int tj = 1; tj <= 10; ++tj) EXPECT_NEAR(sop(tj, 0), pi, 1e-9);
}

TEST(SmallestOptimumPhaseTest, BalancedInputsMatchLegendreRoots) {
  for (int j = 1; j <= 16; ++j) {
    const double expected = static_cast<double>(std::acos(testing::legendre_largest_root(j)));
    EXPECT_NEAR(sop(j, j), expected, 1e-9) << "j=" << j;
  }
  EXPECT_NEAR(sop(5, 5), 0.4366349, 1e-7);
}

TEST(SmallestOptimumPhaseTest, IsAZeroAndTheFirstOne) {
  for (int tj = 1; tj <= 12; ++tj) {
    for (int na = 0; na <= tj; ++na) {
      const SpinState s = SpinState::from_photons(na, tj - na);
      const double t = smallest_optimum_phase(s);
      EXPECT_LE(binary_error_closed_form(s, t), kZeroErrorTol);
      // No sign change of d_{mu mu} on a fine grid before t.
      const double d0 = wigner_d(s.j(), s.mu(), s.mu(), 1e-4);
      for (double x = 1e-4; x < t - 1e-6; x += 1e-4) {
        EXPECT_GT(d0 * wigner_d(s.j(), s.mu(), s.mu(), x), 0.0) << s.label() << " x=" << x;
      }
    }
  }
}

TEST(SmallestOptimumPhaseTest, ShrinksTowardBalance) {
  for (int j = 1; j <= 6; ++j) {
    double prev = 0.0;
    for (int m = 0; m <= j; ++m) {
      const double t = sop(j + m, j - m);
      EXPECT_GE(t, prev - 1e-12) << "j=" << j << " m=" << m;
      prev = t;
    }
  }
  double prev = 4.0;
  for (int j = 1; j <= 6; ++j) {
    const double t = sop(j, j);
    EXPECT_LE(t, prev + 1e-12);
    prev = t;
  }
}

TEST(PowerLawFitTest, ExactPowerLaw) {
  const std::vector<double> x{1, 2, 3, 5, 8};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 / v);
  const PowerLawFit f = fit_power_law(x, y);
  EXPECT_NEAR(f.amplitude, 2.0, 1e-12);
  EXPECT_NEAR(f.exponent, -1.0, 1e-12);
  EXPECT_LT(f.amplitude_se, 1e-10);
  EXPECT_LT(f.exponent_se, 1e-10);
}

TEST(PowerLawFitTest, StandardErrorsMatchRegressionFormula) {
  const std::vector<double> x{1, 2, 4, 7, 11, 16};
  const std::vector<double> y{3.1, 1.4, 0.9, 0.45, 0.33, 0.2};
  const PowerLawFit f = fit_power_law(x, y);
  const int n = 6;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double u = std::log(x[i]);
    const double v = std::log(y[i]);
    sx += u, sy += v, sxx += u * u, sxy += u * v;
  }
  const double sxx_c = sxx - sx * sx / n;
  const double slope = (sxy - sx * sy / n) / sxx_c;
  const double intercept = (sy - slope * sx) / n;
  double rss = 0;
  for (int i = 0; i < n; ++i) rss += std::pow(std::log(y[i]) - intercept - slope * std::log(x[i]), 2);
  const double sigma2 = rss / (n - 2);
  EXPECT_NEAR(f.exponent, slope, 1e-12);
  EXPECT_NEAR(f.amplitude, std::exp(intercept), 1e-12);
  EXPECT_NEAR(f.exponent_se, std::sqrt(sigma2 / sxx_c), 1e-12);
  EXPECT_NEAR(f.amplitude_se, std::exp(intercept) * std::sqrt(sigma2 * sxx / (n * sxx_c)), 1e-12);
}

TEST(PowerLawFitTest, RejectsDegenerateInput) {
  EXPECT_THROW(fit_power_law({1.0}, {1.0}), DomainError);
  EXPECT_THROW(fit_power_law({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0}), DomainError);
  EXPECT_THROW(fit_power_law({1.0, 2.0, 3.0}, {1.0, -2.0, 3.0}), DomainError);
  EXPECT_THROW(fit_power_law({1.0, 2.0}, {1.0, 2.0, 3.0}), DomainError);
}

TEST(PowerLawFitTest, BalancedInputScaling) {
  std::vector<int> two_j;
  std::vector<double> values;
  for (int n = 1; n <= 5; ++n) {
    two_j.push_back(2 * n);
    values.push_back(sop(n, n));
  }
  const PowerLawFit f = fit_sop_scaling(two_j, values);
  EXPECT_NEAR(f.amplitude, 2.67, 0.15);
  EXPECT_NEAR(f.exponent, -0.77, 0.05);
  EXPECT_GT(f.amplitude_se, 0.0);
  EXPECT_GT(f.exponent_se, 0.0);
}

TEST(TernarySurfaceTest, UpperTriangleOnly) {
  const TernarySurface s = ternary_surface(SpinState::from_photons(2, 1), 0.1);
  ASSERT_EQ(s.pe.rows(), s.thetas.size());
  ASSERT_EQ(s.pe.cols(), s.thetas.size());
  EXPECT_LE(s.thetas(s.thetas.size() - 1), kTernaryMaxTheta + 1e-12);
  for (Eigen::Index a = 0; a < s.pe.rows(); ++a) {
    for (Eigen::Index b = 0; b < s.pe.cols(); ++b) {
      if (a >= b) {
        EXPECT_TRUE(std::isnan(s.pe(a, b)));
      } else {
        EXPECT_GE(s.pe(a, b), 0.0);
        EXPECT_LE(s.pe(a, b), 2.0 / 3.0 + 1e-12);
      }
    }
  }
}

TEST(TernarySurfaceTest, MatchesExponentialOracle) {
  const SpinState st = SpinState::from_photons(3, 2);
  const TernarySurface s = ternary_surface(st, 0.2);
  for (Eigen::Index a = 0; a < s.pe.rows(); ++a) {
    for (Eigen::Index b = a + 1; b < s.pe.cols(); ++b) {
      EXPECT_NEAR(s.pe(a, b), ternary_error_oracle(st, s.thetas(a), s.thetas(b)), 1e-12);
    }
  }
}

TEST(TernarySurfaceTest, ThreadCountDoesNotChangeValues) {
  const SpinState st = SpinState::from_photons(4, 2);
  const TernarySurface a = ternary_surface(st, 0.02, kTernaryMaxTheta, 1);
  const TernarySurface b = ternary_surface(st, 0.02, kTernaryMaxTheta, 4);
  EXPECT_TRUE(a.thetas == b.thetas);
  for (Eigen::Index i = 0; i < a.pe.size(); ++i) {
    const double x = a.pe.data()[i];
    const double y = b.pe.data()[i];
    EXPECT_TRUE((std::isnan(x) && std::isnan(y)) || x == y);
  }
}

TEST(TernaryOptimizeTest, PhotonPairExamples) {
  const TernaryOptimum a = ternary_optimize(SpinState::from_photons(9, 3));
  EXPECT_NEAR(a.theta1, 0.42, 0.05);
  EXPECT_NEAR(a.theta2, pi, 0.05);
  EXPECT_LT(a.pe, 7e-5);
  EXPECT_NEAR(a.mi, 1.58, 0.03);

  const TernaryOptimum b = ternary_optimize(SpinState::from_photons(10, 0));
  EXPECT_NEAR(b.theta1, pi / 2, 0.05);
  EXPECT_NEAR(b.theta2, pi, 0.05);
  EXPECT_NEAR(b.pe, 6.8e-4, 0.2 * 6.8e-4);
  EXPECT_NEAR(b.mi, 1.57, 0.03);
}

TEST(TernaryOptimizeTest, SinglePortFourPhotons) {
  // At pi/2 the outcomes are binomial (1, 4, 6, 4, 1) / 16; mu' = +-2 go to 0 and pi, the
  // middle three (14/16) to pi/2, so the success probability is (1 + 14/16 + 1) / 3 = 23/24.
  const SpinState s = SpinState::from_photons(4, 0);
  EXPECT_NEAR(ternary_summary(s, pi / 2, pi).pe, 1.0 / 24.0, 1e-14);
  EXPECT_NEAR(ternary_error_oracle(s, pi / 2, pi), 1.0 / 24.0, 1e-12);
  const TernaryOptimum o = ternary_optimize(s);
  EXPECT_NEAR(o.theta1, pi / 2, 0.05);
  EXPECT_NEAR(o.theta2, pi, 0.05);
  EXPECT_NEAR(o.pe, 0.040, 0.2 * 0.040);
}

TEST(TernaryOptimizeTest, RefinementNeverWorseThanGrid) {
  for (int tj = 2; tj <= 8; ++tj) {
    for (int na = (tj + 1) / 2; na <= tj; ++na) {
      const SpinState s = SpinState::from_photons(na, tj - na);
      TernarySearchOptions opt;
      opt.coarse = 2e-2;
      const TernaryOptimum o = ternary_optimize(s, opt);
      EXPECT_LE(o.pe, o.grid_objective + 1e-9) << s.label();
      EXPECT_LT(o.theta1, o.theta2);
      EXPECT_GT(o.theta1, 0.0);
      EXPECT_LE(o.theta2, kTernaryMaxTheta);
      EXPECT_NEAR(o.pe, ternary_error_oracle(s, o.theta1, o.theta2), 1e-12);

      // Independent brute-force grid minimum at the same resolution.
      const TernarySurface surf = ternary_surface(s, opt.coarse);
      double best = 1.0;
      for (Eigen::Index a = 0; a < surf.pe.rows(); ++a) {
        for (Eigen::Index b = a + 1; b < surf.pe.cols(); ++b) best = std::min(best, surf.pe(a, b));
      }
      EXPECT_LE(o.pe, best + 1e-9) << s.label();

      const TernaryOptimum info = ternary_maximize_information(s, opt);
      EXPECT_GE(info.mi, o.mi - 1e-9);
      EXPECT_LE(info.mi, std::log2(3.0) + 1e-12);
    }
  }
}

TEST(TernaryOptimizeTest, DeterministicAcrossThreads) {
  TernarySearchOptions one;
  TernarySearchOptions four;
  four.threads = 4;
  const SpinState s = SpinState::from_photons(5, 2);
  const TernaryOptimum a = ternary_optimize(s, one);
  const TernaryOptimum b = ternary_optimize(s, four);
  EXPECT_EQ(a.theta1, b.theta1);
  EXPECT_EQ(a.theta2, b.theta2);
  EXPECT_EQ(a.pe, b.pe);
  EXPECT_EQ(a.mi, b.mi);
}

TEST(TernaryOptimizeTest, RejectsBadOptions) {
  TernarySearchOptions opt;
  opt.tolerance = 0.0;
  EXPECT_THROW(ternary_optimize(SpinState::from_photons(1, 1), opt), DomainError);
}

}  // namespace
}  // namespace fsi
