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


#include "fsi/spin_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fsi/fock_oracle.hpp"
#include "oracles.hpp"

namespace fsi {
namespace {

using std::numbers::pi;
using testing::uniform;
using testing::uniform_int;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

TEST(HalfIntTest, ArithmeticAndFormatting) {
  EXPECT_EQ(h(3) + h(1), HalfInt(2));
  EXPECT_EQ(-h(3), h(-3));
  EXPECT_DOUBLE_EQ(h(-5).value(), -2.5);
  EXPECT_TRUE(HalfInt(4).is_integer());
  EXPECT_FALSE(h(7).is_integer());
  EXPECT_EQ(to_string(h(3)), "3/2");
  EXPECT_EQ(to_string(h(-1)), "-1/2");
  EXPECT_EQ(to_string(HalfInt(2)), "2");
  EXPECT_LT(h(-1), h(1));
}

TEST(SpinStateTest, RoundTripsWithPhotonPair) {
  for (int na = 0; na <= 12; ++na) {
    for (int nb = 0; nb <= 12; ++nb) {
      const SpinState s = SpinState::from_photons(na, nb);
      EXPECT_EQ(s.two_j(), na + nb);
      EXPECT_EQ(s.two_mu(), na - nb);
      EXPECT_EQ(s.photons(), (PhotonPair{na, nb}));
      EXPECT_EQ(SpinState::from_spin(s.j(), s.mu()), s);
      EXPECT_EQ(s.outcome_count(), na + nb + 1);
    }
  }
}

TEST(SpinStateTest, Labels) {
  const SpinState s = SpinState::from_photons(3, 0);
  EXPECT_EQ(s.label(), "|3>|0>");
  EXPECT_EQ(s.spin_label(), "|3/2 3/2>_z");
  EXPECT_EQ(SpinState::from_photons(2, 2).spin_label(), "|2 0>_z");
}

TEST(SpinStateTest, RejectsInvalidInput) {
  EXPECT_THROW(SpinState::from_photons(-1, 2), DomainError);
  EXPECT_THROW(SpinState::from_spin(HalfInt(1), HalfInt(2)), DomainError);
  EXPECT_THROW(SpinState::from_spin(HalfInt(1), h(1)), DomainError);
  EXPECT_THROW(SpinState::from_photons(40, 30), OverflowError);
}

TEST(WignerDTest, IdentityAtZero) {
  for (int tj = 0; tj <= 10; ++tj) {
    const Eigen::MatrixXd d = wigner_d_matrix(h(tj), 0.0);
    EXPECT_TRUE(d.isApprox(Eigen::MatrixXd::Identity(tj + 1, tj + 1), 1e-15)) << "2j=" << tj;
  }
}

TEST(WignerDTest, SpinHalfClosedForm) {
  for (double theta : {0.0, 0.3, 1.2, pi / 2, 2.9, -1.7}) {
    EXPECT_NEAR(wigner_d(h(1), h(1), h(1), theta), std::cos(theta / 2), 1e-15);
  }
}

TEST(WignerDTest, SpinOneCentralElement) {
  EXPECT_NEAR(wigner_d(HalfInt(1), HalfInt(0), HalfInt(0), pi / 3), 0.5, 1e-15);
}

TEST(WignerDTest, MatchesMatrixExponential) {
  for (int tj = 0; tj <= 12; ++tj) {
    for (double theta : {0.1, 0.7, pi / 2, 2.2, pi, -0.9, 4.0}) {
      const Eigen::MatrixXd expected = testing::rotation_by_exponential(tj, theta);
      const Eigen::MatrixXd d = wigner_d_matrix(h(tj), theta);
      EXPECT_LT((d - expected).cwiseAbs().maxCoeff(), 1e-12) << "2j=" << tj << " theta=" << theta;
    }
  }
}

TEST(WignerDTest, RowNormalizationAndOrthogonality) {
  for (int tj = 0; tj <= 20; ++tj) {
    for (int k = 0; k <= 24; ++k) {
      const double theta = -pi + k * pi / 12;
      const Eigen::MatrixXd d = wigner_d_matrix(h(tj), theta);
      const Eigen::MatrixXd gram = d.transpose() * d;
      EXPECT_LT((gram - Eigen::MatrixXd::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((d.array().square().colwise().sum() - 1.0).abs().maxCoeff(), 1e-10);
    }
  }
}

TEST(WignerDTest, SymmetryRelationsOnRandomGrid) {
  for (int trial = 0; trial < 2000; ++trial) {
    const int tj = uniform_int(0, 40);
    const HalfInt j = h(tj);
    const HalfInt mp = h(2 * uniform_int(0, tj) - tj);
    const HalfInt m = h(2 * uniform_int(0, tj) - tj);
    const double theta = uniform(-2 * pi, 2 * pi);
    const double d = wigner_d(j, mp, m, theta);
    const double sign = ((mp - m).twice() / 2) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(d, sign * wigner_d(j, m, mp, theta), 1e-12);
    EXPECT_NEAR(d, wigner_d(j, -m, -mp, theta), 1e-12);
    EXPECT_NEAR(wigner_d(j, mp, m, -theta), wigner_d(j, m, mp, theta), 1e-12);
    EXPECT_LE(std::abs(d), 1.0 + 1e-12);
  }
}

TEST(WignerDTest, DomainAndOverflowErrors) {
  EXPECT_THROW(wigner_d(HalfInt(1), HalfInt(2), HalfInt(0), 0.1), DomainError);
  EXPECT_THROW(wigner_d(HalfInt(1), h(1), HalfInt(0), 0.1), DomainError);
  EXPECT_THROW(wigner_d(h(-2), HalfInt(0), HalfInt(0), 0.1), DomainError);
  EXPECT_THROW(wigner_d(h(kMaxTwoJ + 2), HalfInt(0), HalfInt(0), 0.1), OverflowError);
  EXPECT_NO_THROW(wigner_d(h(kMaxTwoJ), HalfInt(0), HalfInt(0), 0.1));
}

TEST(WignerDTest, LongDoubleAgreesWithDouble) {
  for (int tj = 0; tj <= 30; tj += 3) {
    const Eigen::MatrixXd d = wigner_d_matrix(h(tj), 1.1);
    const auto dl = wigner_d_matrix<long double>(h(tj), 1.1L);
    EXPECT_LT((d - dl.cast<double>()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(OutcomeDistributionTest, HongOuMandel) {
  const OutcomeDistribution p = outcome_distribution(SpinState::from_photons(1, 1), pi / 2);
  ASSERT_EQ(p.probs.size(), 3);
  EXPECT_NEAR(p.probs(0), 0.5, 1e-15);
  EXPECT_NEAR(p.probs(1), 0.0, 1e-15);
  EXPECT_NEAR(p.probs(2), 0.5, 1e-15);
  EXPECT_EQ(p.mu_prime(0), HalfInt(-1));
  EXPECT_DOUBLE_EQ(p.at(HalfInt(1)), p.probs(2));
}

TEST(OutcomeDistributionTest, PointMassAtZeroPhase) {
  for (int na = 0; na <= 8; ++na) {
    for (int nb = 0; nb <= 8; ++nb) {
      const SpinState s = SpinState::from_photons(na, nb);
      const OutcomeDistribution p = outcome_distribution(s, 0.0);
      EXPECT_DOUBLE_EQ(p.at(s.mu()), 1.0);
      EXPECT_DOUBLE_EQ(p.probs.sum(), 1.0);
    }
  }
}

TEST(OutcomeDistributionTest, FullInversionAtPi) {
  for (int tj = 1; tj <= 20; ++tj) {
    const OutcomeDistribution p = outcome_distribution(SpinState::from_photons(tj, 0), pi);
    EXPECT_NEAR(p.probs(0), 1.0, 1e-12) << "2j=" << tj;
  }
}

TEST(OutcomeDistributionTest, MatchesFockOracle) {
  for (int tj = 0; tj <= 8; ++tj) {
    for (int na = 0; na <= tj; ++na) {
      const SpinState s = SpinState::from_photons(na, tj - na);
      for (int k = 0; k <= 34; ++k) {
        const double theta = k * pi / 17;
        const OutcomeDistribution a = outcome_distribution(s, theta);
        const OutcomeDistribution b = oracle::mzi_distribution(s.photons(), theta);
        EXPECT_LT((a.probs - b.probs).cwiseAbs().maxCoeff(), 1e-9) << s.label() << " theta=" << theta;
      }
    }
  }
}

TEST(OutcomeDistributionTest, BalancedInputParity) {
  for (int n = 0; n <= 15; ++n) {
    for (double theta : {0.2, 0.9, 1.7, 2.6}) {
      const Eigen::VectorXd p = outcome_distribution(SpinState::from_photons(n, n), theta).probs;
      EXPECT_LT((p - p.reverse()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(OutcomeDistributionTest, NormalizedWithoutHealthWarnings) {
  reset_health_warnings();
  for (int tj = 0; tj <= kMaxTwoJ; tj += 4) {
    for (int na = 0; na <= tj; na += 2) {
      const OutcomeDistribution p = outcome_distribution(SpinState::from_photons(na, tj - na), 0.77);
      EXPECT_NEAR(p.probs.sum(), 1.0, 1e-12);
      EXPECT_GE(p.probs.minCoeff(), 0.0);
      EXPECT_LT(p.residual, kHealthResidual);
    }
  }
  EXPECT_EQ(health_warning_count(), 0u);
}

TEST(MomentsTest, Examples) {
  EXPECT_DOUBLE_EQ(mean_photon_difference(SpinState::from_photons(2, 0), 0.0), 2.0);
  EXPECT_DOUBLE_EQ(mean_photon_difference(SpinState::from_photons(3, 3), 1.3), 0.0);
  EXPECT_NEAR(mean_photon_difference(SpinState::from_photons(3, 1), pi / 3), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(std_photon_difference(SpinState::from_photons(4, 1), 0.0), 0.0);
  EXPECT_NEAR(std_photon_difference(SpinState::from_photons(2, 0), pi / 2), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std_photon_difference(SpinState::from_photons(1, 1), pi / 2), 2.0, 1e-15);
}

TEST(MomentsTest, AgreeWithDistributionMoments) {
  for (int tj = 0; tj <= 12; ++tj) {
    for (int na = 0; na <= tj; ++na) {
      const SpinState s = SpinState::from_photons(na, tj - na);
      for (int k = 0; k < 16; ++k) {
        const double theta = -pi + k * 2 * pi / 15;
        const OutcomeDistribution p = outcome_distribution(s, theta);
        double mean = 0.0;
        double second = 0.0;
        for (Eigen::Index i = 0; i < p.probs.size(); ++i) {
          const double diff = 2 * p.mu_prime(i).value();
          mean += p.probs(i) * diff;
          second += p.probs(i) * diff * diff;
        }
        const double sd = std_photon_difference(s, theta);
        EXPECT_NEAR(mean, mean_photon_difference(s, theta), 1e-9);
        EXPECT_NEAR(second - mean * mean, sd * sd, 1e-9);
      }
    }
  }
}

TEST(PhaseErrorTest, Examples) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_NEAR(phase_error_estimate(SpinState::from_photons(n, 0)), 1.0 / std::sqrt(n), 1e-14);
  }
  EXPECT_NEAR(phase_error_estimate(SpinState::from_photons(3, 1)), std::sqrt(2.5), 1e-14);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_THROW(phase_error_estimate(SpinState::from_photons(n, n)), BalancedInputError);
  }
}

TEST(PhaseErrorTest, MatchesErrorPropagation) {
  for (int na = 0; na <= 8; ++na) {
    for (int nb = 0; nb <= 8; ++nb) {
      if (na == nb) continue;
      const SpinState s = SpinState::from_photons(na, nb);
      const double theta = pi / 2;
      const double step = 1e-6;
      const double slope =
          (mean_photon_difference(s, theta + step) - mean_photon_difference(s, theta - step)) / (2 * step);
      EXPECT_NEAR(std_photon_difference(s, theta) / std::abs(slope), phase_error_estimate(s), 1e-8) << s.label();
    }
  }
}

}  // namespace
}  // namespace fsi
