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

// Brute-force two-mode Fock-space model of the interferometer. It composes
// beam splitters and a phase shifter combinatorially on the fixed-photon-number
// subspace and never touches rotation matrices, so it serves as an independent
// check on spin_core.

#ifndef FSI_FOCK_ORACLE_HPP
#define FSI_FOCK_ORACLE_HPP

#include <Eigen/Dense>

#include "fsi/spin_core.hpp"

namespace fsi::oracle {

/// Photon cap for the oracle; each device application costs O((2j)^3).
inline constexpr int kOracleMaxTwoJ = 24;

/// Pure state in the span of |k>_a |total-k>_b, k = 0..total. amps(k) is the
/// amplitude of k photons in mode a.
struct ModeAmplitudes {
  int total = 0;
  Eigen::VectorXcd amps;

  double norm_squared() const { return amps.squaredNorm(); }
};

/// Lossless beam splitter with mixing angle phi: rho = cos(phi/2), tau = sin(phi/2).
/// Acts as a^dag -> rho a^dag - i tau b^dag, b^dag -> -i tau a^dag + rho b^dag.
struct BeamSplitterSpec {
  double phi = 0.0;
  double rho() const;
  double tau() const;
};

ModeAmplitudes fock_state(PhotonPair input);

ModeAmplitudes apply_beam_splitter(const ModeAmplitudes& state, BeamSplitterSpec bs);

/// Phase theta in arm a: amplitude of |k>_a |total-k>_b picks up exp(i theta k).
ModeAmplitudes apply_phase(const ModeAmplitudes& state, double theta);

/// <N_a> for the given state.
double arm_occupancy(const ModeAmplitudes& state);

/// Output photon-difference distribution of BS(pi/2), phase(theta), BS(-pi/2).
OutcomeDistribution mzi_distribution(PhotonPair input, double theta);

}  // namespace fsi::oracle

#endif  // FSI_FOCK_ORACLE_HPP
