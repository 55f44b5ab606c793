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

#include "fsi/reading.hpp"

#include <cmath>
#include <numbers>

#include "fsi/baselines.hpp"
#include "fsi/discrimination.hpp"
#include "fsi/errors.hpp"

namespace fsi {

namespace {

constexpr double kTieTol = 1e-9;

std::optional<double> maybe_pie(double capacity, double n_s) {
  if (n_s > 0.0) return pie(capacity, n_s);
  return std::nullopt;
}

ReadingReport ternary_report(const SpinState& state, double t1, double t2, const std::string& placement) {
  const DiscriminationSummary s = ternary_summary(state, t1, t2);
  ReadingReport r;
  r.probe = state.label();
  r.encoding = Encoding::kTpsk;
  r.placement = placement;
  r.n_s = signal_photons(state);
  r.capacity = s.mi;
  r.pie = maybe_pie(s.mi, r.n_s);
  r.phases = {0.0, t1, t2};
  r.pe = s.pe;
  return r;
}

}  // namespace

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::kBpsk: return "bpsk";
    case Encoding::kTpsk: return "tpsk";
    case Encoding::kOok: return "ook";
  }
  return "unknown";
}

double signal_photons(const SpinState& state) { return state.j().value(); }

ReadingReport bpsk_capacity(const SpinState& state, double resolution) {
  ReadingReport r;
  r.probe = state.label();
  r.encoding = Encoding::kBpsk;
  r.placement = "max-mi";
  r.n_s = signal_photons(state);

  // A zero-error phase gives the binary maximum of 1 bit, and the first one is
  // the smallest maximizer.
  double theta = 0.0;
  try {
    theta = smallest_optimum_phase(state);
  } catch (const NoZeroError&) {
    const SweepResult sweep = binary_sweep(state, resolution);
    const double best = sweep.mi.maxCoeff();
    Eigen::Index k = 0;
    while (sweep.mi(k) < best - kTieTol) ++k;
    theta = sweep.thetas(k);
  }
  const DiscriminationSummary s = summarize(state, HypothesisSet({0.0, theta}));
  r.capacity = s.mi;
  r.pe = s.pe;
  r.pie = maybe_pie(s.mi, r.n_s);
  r.phases = {0.0, theta};
  return r;
}

ReadingReport tpsk_report(const SpinState& state, const std::optional<std::vector<double>>& phases,
                          const TernarySearchOptions& options) {
  if (!phases) {
    const TernaryOptimum opt = ternary_maximize_information(state, options);
    return ternary_report(state, opt.theta1, opt.theta2, "max-mi");
  }
  if (phases->size() != 3) throw DomainError("tpsk_report: exactly three phases are required");
  const HypothesisSet hyp(*phases);
  const DiscriminationSummary s = summarize(state, hyp);
  ReadingReport r;
  r.probe = state.label();
  r.encoding = Encoding::kTpsk;
  r.placement = "fixed";
  r.n_s = signal_photons(state);
  r.capacity = s.mi;
  r.pie = maybe_pie(s.mi, r.n_s);
  r.phases = *phases;
  r.pe = s.pe;
  return r;
}

ReadingReport tpsk_min_error_report(const SpinState& state, const TernarySearchOptions& options) {
  const TernaryOptimum opt = ternary_optimize(state, options);
  return ternary_report(state, opt.theta1, opt.theta2, "min-pe");
}

std::vector<ReceiverRow> receiver_comparison(const std::vector<double>& n_s_grid) {
  std::vector<ReceiverRow> rows;
  for (double n_s : n_s_grid) {
    if (!(n_s > 0.0) || !std::isfinite(n_s)) throw DomainError("receiver_comparison: n_s must be positive");

    const int two_j = std::max(1, static_cast<int>(std::lround(2.0 * n_s)));
    const SpinState probe = SpinState::from_spin(HalfInt::from_twice(two_j), HalfInt::from_twice(two_j % 2));
    const ReadingReport fsi = bpsk_capacity(probe);
    ReceiverRow f{n_s, "fsi-bpsk", fsi.n_s, fsi.capacity, pie(fsi.capacity, fsi.n_s), fsi.pe, probe.label()};
    if (std::abs(fsi.n_s - n_s) > 1e-12) f.note += " nearest achievable j=" + to_string(probe.j());
    rows.push_back(f);

    const double alpha = std::sqrt(n_s);
    const double pe_hom = homodyne_error(alpha);
    const double c_hom = binary_channel_capacity(pe_hom);
    rows.push_back({n_s, "homodyne-bpsk", n_s, c_hom, pie(c_hom, n_s), pe_hom, "|alpha|^2=n_s"});

    const double pe_dol = dolinar_error(alpha);
    const double c_dol = binary_channel_capacity(pe_dol);
    rows.push_back({n_s, "dolinar-bpsk", n_s, c_dol, pie(c_dol, n_s), pe_dol, "|alpha|^2=n_s"});

    const double c_ook = ook_direct_detection_capacity(n_s);
    rows.push_back({n_s, "ook-direct", n_s, c_ook, pie(c_ook, n_s), std::exp(-n_s) / 2, "miss=exp(-n_s)"});

    const double c_hol = holevo_capacity(n_s);
    rows.push_back({n_s, "holevo", n_s, c_hol, pie(c_hol, n_s), 0.0, "bound"});
  }
  return rows;
}

}  // namespace fsi
