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

// Quantum-reading figures of merit: per-pixel capacity as the best achievable
// mutual information over phase placements, photon information efficiency, and
// a side-by-side comparison with coherent-state receivers.

#ifndef FSI_READING_HPP
#define FSI_READING_HPP

#include <optional>
#include <string>
#include <vector>

#include "fsi/phase_search.hpp"
#include "fsi/spin_core.hpp"

namespace fsi {

enum class Encoding { kBpsk, kTpsk, kOok };

std::string to_string(Encoding e);

struct ReadingReport {
  std::string probe;
  Encoding encoding = Encoding::kBpsk;
  /// How the phase placement was chosen: "max-mi", "min-pe" or "fixed".
  std::string placement;
  double n_s = 0.0;
  double capacity = 0.0;
  /// capacity / n_s; empty when n_s == 0.
  std::optional<double> pie;
  /// Full phase placement, including the reference phase 0.
  std::vector<double> phases;
  double pe = 0.0;
};

/// Mean photon number in the phase-bearing arm: j.
double signal_photons(const SpinState& state);

/// Binary (0, theta) reading: maximal MI over theta in (0, pi], smallest
/// maximizing theta reported.
ReadingReport bpsk_capacity(const SpinState& state, double resolution = 1e-3);

/// Ternary reading. With `phases` (three distinct values) the placement is
/// evaluated as given; otherwise the MI-maximizing (0, theta1, theta2) is used.
ReadingReport tpsk_report(const SpinState& state, const std::optional<std::vector<double>>& phases = std::nullopt,
                          const TernarySearchOptions& options = {});

/// Ternary reading at the minimum-error placement.
ReadingReport tpsk_min_error_report(const SpinState& state, const TernarySearchOptions& options = {});

/// One receiver at one photon budget.
struct ReceiverRow {
  double n_s_requested = 0.0;
  std::string receiver;
  /// Signal photons actually used (FSI rounds to the nearest half-integer j >= 1/2).
  double n_s = 0.0;
  double capacity = 0.0;
  double pie = 0.0;
  double pe = 0.0;
  std::string note;
};

/// Receivers compared: "fsi-bpsk", "homodyne-bpsk", "dolinar-bpsk", "ook-direct", "holevo".
/// Coherent BPSK uses |alpha|^2 = n_s; FSI uses n_s = j.
std::vector<ReceiverRow> receiver_comparison(const std::vector<double>& n_s_grid);

}  // namespace fsi

#endif  // FSI_READING_HPP
