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

#include "fsi/fock_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace fsi::oracle {

namespace {

using cd = std::complex<double>;

void check_total(int total) {
  if (total < 0) throw DomainError("negative photon number");
  if (total > kOracleMaxTwoJ) throw OverflowError("oracle photon cap is " + std::to_string(kOracleMaxTwoJ));
}

double binomial(int n, int k) {
  return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

}  // namespace

double BeamSplitterSpec::rho() const { return std::cos(phi / 2); }
double BeamSplitterSpec::tau() const { return std::sin(phi / 2); }

ModeAmplitudes fock_state(PhotonPair input) {
  if (input.n_a < 0 || input.n_b < 0) throw DomainError("negative photon number");
  ModeAmplitudes s;
  s.total = input.n_a + input.n_b;
  check_total(s.total);
  s.amps = Eigen::VectorXcd::Zero(s.total + 1);
  s.amps(input.n_a) = 1.0;
  return s;
}

ModeAmplitudes apply_beam_splitter(const ModeAmplitudes& state, BeamSplitterSpec bs) {
  const int n = state.total;
  check_total(n);
  const double rho = bs.rho();
  const cd mtau(0.0, -bs.tau());

  // Integer powers of rho and -i tau up to n.
  std::vector<double> rho_pow(n + 1, 1.0);
  std::vector<cd> mtau_pow(n + 1, 1.0);
  for (int p = 1; p <= n; ++p) {
    rho_pow[p] = rho_pow[p - 1] * rho;
    mtau_pow[p] = mtau_pow[p - 1] * mtau;
  }

  ModeAmplitudes out;
  out.total = n;
  out.amps = Eigen::VectorXcd::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    const cd in = state.amps(k);
    if (in == cd(0.0)) continue;
    const int l = n - k;
    // (a^dag)^k -> sum_p C(k,p) rho^p (-i tau)^(k-p) a^dag^p b^dag^(k-p)
    // (b^dag)^l -> sum_q C(l,q) (-i tau)^q rho^(l-q) a^dag^q b^dag^(l-q)
    for (int p = 0; p <= k; ++p) {
      for (int q = 0; q <= l; ++q) {
        const int out_a = p + q;
        const double norm = std::exp(0.5 * (log_factorial(out_a) + log_factorial(n - out_a) -
                                            log_factorial(k) - log_factorial(l)));
        const double real_part = binomial(k, p) * binomial(l, q) * rho_pow[p] * rho_pow[l - q] * norm;
        out.amps(out_a) += in * real_part * mtau_pow[k - p + q];
      }
    }
  }
  return out;
}

ModeAmplitudes apply_phase(const ModeAmplitudes& state, double theta) {
  ModeAmplitudes out = state;
  for (int k = 0; k <= state.total; ++k) out.amps(k) *= std::polar(1.0, theta * k);
  return out;
}

double arm_occupancy(const ModeAmplitudes& state) {
  double mean = 0.0;
  for (int k = 0; k <= state.total; ++k) mean += k * std::norm(state.amps(k));
  return mean;
}

OutcomeDistribution mzi_distribution(PhotonPair input, double theta) {
  const double half_pi = std::numbers::pi / 2;
  ModeAmplitudes s = fock_state(input);
  s = apply_beam_splitter(s, {half_pi});
  s = apply_phase(s, theta);
  s = apply_beam_splitter(s, {-half_pi});

  OutcomeDistribution out;
  out.j = HalfInt::from_twice(s.total);
  out.probs = s.amps.cwiseAbs2();
  const double total = out.probs.sum();
  out.residual = std::abs(total - 1.0);
  out.probs /= total;
  return out;
}

}  // namespace fsi::oracle
