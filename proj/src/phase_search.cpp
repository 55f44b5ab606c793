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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "fsi/errors.hpp"
#include "fsi/parallel.hpp"

namespace fsi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBracketStep = 1e-3;
constexpr double kBisectionWidth = 1e-12;
constexpr double kTieTol = 1e-9;
// Keeps refined phases clear of the duplicate-phase rule.
constexpr double kMinSeparation = 1e-9;

OutcomeDistribution point_mass(const SpinState& state) {
  OutcomeDistribution d;
  d.j = state.j();
  d.probs = Eigen::VectorXd::Zero(state.outcome_count());
  d.probs((state.two_mu() + state.two_j()) / 2) = 1.0;
  return d;
}

DiscriminationSummary summarize_rows(const Eigen::VectorXd& r0, const Eigen::VectorXd& r1, const Eigen::VectorXd& r2) {
  Eigen::MatrixXd table(3, r0.size());
  table.row(0) = r0.transpose();
  table.row(1) = r1.transpose();
  table.row(2) = r2.transpose();
  const Eigen::VectorXd priors = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  const ConfusionMatrix cm = confusion_matrix(table, ml_rule(table, priors));
  return {error_probability(cm, priors), mutual_information(cm, priors)};
}

enum class Goal { kMinError, kMaxInformation };

// Lexicographic objective; smaller is better.
struct Score {
  double primary = 0.0;
  double secondary = 0.0;
};

Score score_of(const DiscriminationSummary& s, Goal goal) {
  if (goal == Goal::kMinError) return {s.pe, -s.mi};
  return {-s.mi, s.pe};
}

bool better(const Score& a, const Score& b) {
  return a.primary < b.primary || (a.primary == b.primary && a.secondary < b.secondary);
}

struct Candidate {
  double theta1;
  double theta2;
  Score score;
};

Eigen::VectorXd ternary_grid(double resolution, double max_theta) {
  if (!(resolution > 0.0) || !(max_theta > resolution)) throw DomainError("ternary grid: bad resolution or range");
  const auto count = static_cast<Eigen::Index>(std::floor(max_theta / resolution + 1e-9));
  Eigen::VectorXd thetas(count);
  for (Eigen::Index k = 0; k < count; ++k) thetas(k) = static_cast<double>(k + 1) * resolution;
  return thetas;
}

// Summaries for every grid pair a < b; the lower triangle is left untouched.
std::vector<DiscriminationSummary> grid_summaries(const SpinState& state, const Eigen::VectorXd& thetas,
                                                  unsigned threads) {
  const auto n = static_cast<std::size_t>(thetas.size());
  std::vector<Eigen::VectorXd> rows(n);
  for (std::size_t k = 0; k < n; ++k) rows[k] = outcome_distribution(state, thetas(static_cast<Eigen::Index>(k))).probs;
  const Eigen::VectorXd origin = point_mass(state).probs;
  std::vector<DiscriminationSummary> out(n * n);
  parallel_for(n, threads, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) out[a * n + b] = summarize_rows(origin, rows[a], rows[b]);
  });
  return out;
}

bool feasible(double t1, double t2, double max_theta) {
  return t1 >= kMinSeparation && t2 - t1 >= kMinSeparation && t2 <= max_theta;
}

Candidate refine(const SpinState& state, Candidate start, Goal goal, const TernarySearchOptions& opt) {
  static constexpr std::array<std::array<int, 2>, 8> kDirections{
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
  Candidate cur = start;
  double step = opt.coarse / 2;
  for (int iter = 0; iter < 100000 && step >= opt.tolerance; ++iter) {
    bool moved = false;
    for (const auto& d : kDirections) {
      const double t1 = cur.theta1 + step * d[0];
      const double t2 = cur.theta2 + step * d[1];
      if (!feasible(t1, t2, opt.max_theta)) continue;
      const Score s = score_of(ternary_summary(state, t1, t2), goal);
      if (better(s, cur.score)) {
        cur = {t1, t2, s};
        moved = true;
        break;
      }
    }
    if (!moved) step /= 2;
  }
  return cur;
}

TernaryOptimum search(const SpinState& state, Goal goal, const TernarySearchOptions& opt) {
  if (!(opt.tolerance > 0.0) || !(opt.coarse > opt.tolerance)) throw DomainError("ternary search: bad tolerances");
  const Eigen::VectorXd thetas = ternary_grid(opt.coarse, opt.max_theta);
  const auto n = static_cast<std::size_t>(thetas.size());
  const std::vector<DiscriminationSummary> grid = grid_summaries(state, thetas, opt.threads);
  auto at = [&](std::size_t a, std::size_t b) { return score_of(grid[a * n + b], goal); };

  // Grid local minima over the 8-neighbourhood restricted to a < b.
  std::vector<std::tuple<double, double, std::size_t, std::size_t>> minima;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Score s = at(a, b);
      bool local = true;
      for (int da = -1; da <= 1 && local; ++da) {
        for (int db = -1; db <= 1 && local; ++db) {
          if (da == 0 && db == 0) continue;
          const auto na = static_cast<long>(a) + da;
          const auto nb = static_cast<long>(b) + db;
          if (na < 0 || nb < 0 || nb >= static_cast<long>(n) || na >= nb) continue;
          if (better(at(static_cast<std::size_t>(na), static_cast<std::size_t>(nb)), s)) local = false;
        }
      }
      if (local) minima.emplace_back(s.primary, s.secondary, a, b);
    }
  }
  std::sort(minima.begin(), minima.end());
  if (minima.empty()) throw DomainError("ternary search: empty grid");
  const std::size_t keep = std::min<std::size_t>(minima.size(), static_cast<std::size_t>(std::max(1, opt.candidates)));

  std::vector<Candidate> refined(keep);
  parallel_for(keep, opt.threads, [&](std::size_t c) {
    const auto& [p, q, a, b] = minima[c];
    refined[c] = refine(state, {thetas(static_cast<Eigen::Index>(a)), thetas(static_cast<Eigen::Index>(b)), {p, q}}, goal, opt);
  });

  // Best primary; near-ties resolved by secondary, then lexicographically.
  double best_primary = std::numeric_limits<double>::infinity();
  for (const auto& c : refined) best_primary = std::min(best_primary, c.score.primary);
  const Candidate* pick = nullptr;
  for (const auto& c : refined) {
    if (c.score.primary > best_primary + kTieTol) continue;
    if (pick == nullptr) {
      pick = &c;
      continue;
    }
    if (goal == Goal::kMaxInformation && std::abs(c.score.secondary - pick->score.secondary) > kTieTol) {
      if (c.score.secondary < pick->score.secondary) pick = &c;
      continue;
    }
    if (std::tie(c.theta1, c.theta2) < std::tie(pick->theta1, pick->theta2)) pick = &c;
  }

  const DiscriminationSummary s = ternary_summary(state, pick->theta1, pick->theta2);
  TernaryOptimum result;
  result.theta1 = pick->theta1;
  result.theta2 = pick->theta2;
  result.pe = s.pe;
  result.mi = s.mi;
  result.grid_objective = std::get<0>(minima.front());
  return result;
}

}  // namespace

Eigen::VectorXd binary_grid(double resolution) {
  if (!(resolution > 0.0) || resolution > kPi / 16 + 1e-15) {
    throw DomainError("binary grid resolution must lie in (0, pi/16]");
  }
  const auto n = static_cast<Eigen::Index>(std::ceil(kPi / resolution - 1e-9));
  Eigen::VectorXd thetas(n);
  for (Eigen::Index k = 0; k < n; ++k) thetas(k) = kPi * static_cast<double>(k + 1) / static_cast<double>(n);
  thetas(n - 1) = kPi;
  return thetas;
}

SweepResult binary_sweep(const SpinState& state, double resolution) {
  SweepResult r;
  r.thetas = binary_grid(resolution);
  r.pe.resize(r.thetas.size());
  r.mi.resize(r.thetas.size());
  for (Eigen::Index k = 0; k < r.thetas.size(); ++k) {
    const DiscriminationSummary s = summarize(state, HypothesisSet({0.0, r.thetas(k)}));
    r.pe(k) = s.pe;
    r.mi(k) = s.mi;
  }
  return r;
}

double binary_error_closed_form(const SpinState& state, double theta) {
  const double d = wigner_d<double>(state.j(), state.mu(), state.mu(), theta);
  return 0.5 * d * d;
}

double smallest_optimum_phase(const SpinState& state, double zero_tol) {
  auto f = [&](double t) { return wigner_d<double>(state.j(), state.mu(), state.mu(), t); };
  const Eigen::VectorXd grid = binary_grid(kBracketStep);
  double lo = 0.0;
  double f_lo = f(lo);
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const double hi = grid(k);
    const double f_hi = f(hi);
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      double a = lo;
      double b = hi;
      double fa = f_lo;
      while (b - a > kBisectionWidth) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      const double root = 0.5 * (a + b);
      if (0.5 * f(root) * f(root) <= zero_tol) return root;
    } else if (k + 1 == grid.size() && 0.5 * f_hi * f_hi <= zero_tol) {
      // Even-order zero of the cos^{2|mu|}(theta/2) factor at pi: no sign change.
      return hi;
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw NoZeroError("no zero-error phase in (0, pi] for " + state.label());
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("fit: x and y differ in length");
  if (x.size() < 3) throw DomainError("fit: at least three points are required");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    const double yi = y[static_cast<std::size_t>(i)];
    if (!(xi > 0.0) || !(yi > 0.0)) throw DomainError("fit: data must be positive");
    design(i, 0) = 1.0;
    design(i, 1) = std::log(xi);
    rhs(i) = std::log(yi);
  }
  if ((design.col(1).array() == design(0, 1)).all()) throw DomainError("fit: all abscissae are equal");
  const Eigen::Matrix2d normal = design.transpose() * design;
  const Eigen::Vector2d coef = normal.ldlt().solve(design.transpose() * rhs);
  const Eigen::VectorXd resid = rhs - design * coef;
  const double sigma2 = resid.squaredNorm() / static_cast<double>(n - 2);
  const Eigen::Matrix2d cov = sigma2 * normal.inverse();

  PowerLawFit fit;
  fit.amplitude = std::exp(coef(0));
  fit.exponent = coef(1);
  fit.amplitude_se = fit.amplitude * std::sqrt(std::max(0.0, cov(0, 0)));
  fit.exponent_se = std::sqrt(std::max(0.0, cov(1, 1)));
  return fit;
}

PowerLawFit fit_sop_scaling(const std::vector<int>& two_j, const std::vector<double>& sop) {
  std::vector<double> x(two_j.begin(), two_j.end());
  return fit_power_law(x, sop);
}

DiscriminationSummary ternary_summary(const SpinState& state, double theta1, double theta2) {
  return summarize(state, HypothesisSet({0.0, theta1, theta2}));
}

TernarySurface ternary_surface(const SpinState& state, double resolution, double max_theta, unsigned threads) {
  TernarySurface surface;
  surface.thetas = ternary_grid(resolution, max_theta);
  const auto n = static_cast<std::size_t>(surface.thetas.size());
  const std::vector<DiscriminationSummary> grid = grid_summaries(state, surface.thetas, threads);
  surface.pe = Eigen::MatrixXd::Constant(surface.thetas.size(), surface.thetas.size(),
                                         std::numeric_limits<double>::quiet_NaN());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      surface.pe(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = grid[a * n + b].pe;
    }
  }
  return surface;
}

TernaryOptimum ternary_optimize(const SpinState& state, const TernarySearchOptions& options) {
  return search(state, Goal::kMinError, options);
}

TernaryOptimum ternary_maximize_information(const SpinState& state, const TernarySearchOptions& options) {
  return search(state, Goal::kMaxInformation, options);
}

}  // namespace fsi
