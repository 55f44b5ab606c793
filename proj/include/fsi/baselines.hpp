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

// Closed-form reference receivers and capacity bounds used to benchmark the
// Fock-state interferometer.

#ifndef FSI_BASELINES_HPP
#define FSI_BASELINES_HPP

namespace fsi {

/// Binary entropy H2(p) in bits, 0 log 0 = 0.
double binary_entropy(double p);

/// BPSK {|alpha>, |-alpha>} read by a homodyne receiver: (1 - erf(|alpha|/2)) / 2.
double homodyne_error(double alpha);

/// Helstrom bound for {|alpha>, |-alpha>}, attained by the Dolinar receiver:
/// (1 - sqrt(1 - exp(-4 |alpha|^2))) / 2.
double dolinar_error(double alpha);

/// Two-phase discrimination with the phase-eigenstate probe of mean photon
/// number j in [0, 1]: 1/2 - sqrt(j (1 - j)).
double phase_eigenstate_error(double j);

/// Holevo capacity of lossless phase encoding with n_s signal photons,
/// (1 + n) log2(1 + n) - n log2 n, in bits per pixel.
double holevo_capacity(double n_s);

/// Capacity of the binary symmetric channel with crossover pe: 1 - H2(pe).
double binary_channel_capacity(double pe);

/// On-off keyed coherent reading with ideal click detection.
///
/// Each pixel is probed by a coherent pulse of mean photon number n_s; an "on"
/// pixel returns it, an "off" pixel returns vacuum. The detector misses an on
/// pixel with probability exp(-n_s) and never clicks on an off pixel. Returns
/// the mutual information of this Z-channel for equiprobable inputs.
double ook_direct_detection_capacity(double n_s);

/// Photon information efficiency, bits per signal photon. Throws DomainError for n_s <= 0.
double pie(double capacity, double n_s);

}  // namespace fsi

#endif  // FSI_BASELINES_HPP
