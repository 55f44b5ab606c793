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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

namespace fsi {

namespace {

std::atomic<std::uint64_t> g_health_warnings{0};

}  // namespace

std::uint64_t health_warning_count() { return g_health_warnings.load(); }

void reset_health_warnings() { g_health_warnings.store(0); }

void note_health_warning(double residual) {
  if (g_health_warnings.fetch_add(1) == 0) {
    std::fprintf(stderr, "fsi: numerical-health warning: normalization residual %.3e\n", residual);
  }
}

SpinState SpinState::from_photons(int n_a, int n_b) {
  if (n_a < 0 || n_b < 0) throw DomainError("photon numbers must be nonnegative");
  if (n_a + n_b > kMaxTwoJ) throw OverflowError("total photon number exceeds " + std::to_string(kMaxTwoJ));
  return SpinState(n_a + n_b, n_a - n_b);
}

SpinState SpinState::from_spin(HalfInt j, HalfInt mu) {
  if (j.twice() < 0) throw DomainError("j must be nonnegative");
  if (mu > j || mu < -j) throw DomainError("|mu| must not exceed j");
  if ((j.twice() - mu.twice()) % 2 != 0) throw DomainError("j - mu must be an integer");
  if (j.twice() > kMaxTwoJ) throw OverflowError("2j exceeds " + std::to_string(kMaxTwoJ));
  return SpinState(j.twice(), mu.twice());
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

std::string SpinState::label() const {
  return "|" + std::to_string(n_a()) + ">|" + std::to_string(n_b()) + ">";
}

std::string SpinState::spin_label() const {
  return "|" + to_string(j()) + " " + to_string(mu()) + ">_z";
}

OutcomeDistribution outcome_distribution(const SpinState& state, double theta) {
  OutcomeDistribution out;
  out.j = state.j();
  const int n = state.outcome_count();
  out.probs.resize(n);
  for (int k = 0; k < n; ++k) {
    const double d = wigner_d<double>(state.j(), out.mu_prime(k), state.mu(), theta);
    out.probs(k) = std::clamp(d * d, 0.0, 1.0);
  }
  const double total = out.probs.sum();
  out.residual = std::abs(total - 1.0);
  out.probs /= total;
  if (out.residual > kHealthResidual) note_health_warning(out.residual);
  return out;
}

double mean_photon_difference(const SpinState& state, double theta) {
  return static_cast<double>(state.n_a() - state.n_b()) * std::cos(theta);
}

double std_photon_difference(const SpinState& state, double theta) {
  const double j = state.j().value();
  const double m = state.mu().value();
  return std::abs(std::sin(theta)) * std::sqrt(2.0 * (j * (j + 1.0) - m * m));
}

double phase_error_estimate(const SpinState& state) {
  if (state.two_mu() == 0) throw BalancedInputError();
  const double j = state.j().value();
  const double m = state.mu().value();
  return std::sqrt(j * (j + 1.0) / (2.0 * m * m) - 0.5);
}

}  // namespace fsi
