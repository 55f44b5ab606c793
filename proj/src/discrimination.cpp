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

#include "fsi/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fsi {

namespace {

constexpr double kPriorTol = 1e-12;
constexpr double kPhaseTol = 1e-12;

double angular_gap(double a, double b) {
  const double two_pi = 2 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace

HypothesisSet::HypothesisSet(std::vector<double> phases, Eigen::VectorXd priors)
    : phases_(std::move(phases)), priors_(std::move(priors)) {
  if (phases_.size() < 2) throw DomainError("at least two hypotheses are required");
  if (priors_.size() != size()) throw DomainError("one prior per phase is required");
  for (double t : phases_) {
    if (!std::isfinite(t)) throw DomainError("phases must be finite");
  }
  if ((priors_.array() < 0.0).any()) throw DomainError("priors must be nonnegative");
  if (std::abs(priors_.sum() - 1.0) > kPriorTol) throw DomainError("priors must sum to 1");
  for (std::size_t a = 0; a < phases_.size(); ++a) {
    for (std::size_t b = a + 1; b < phases_.size(); ++b) {
      if (angular_gap(phases_[a], phases_[b]) <= kPhaseTol) {
        throw DomainError("duplicate phases (mod 2 pi) at positions " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
}

HypothesisSet::HypothesisSet(std::vector<double> phases)
    : HypothesisSet(phases, Eigen::VectorXd::Constant(static_cast<Eigen::Index>(phases.size()),
                                                      phases.empty() ? 0.0 : 1.0 / static_cast<double>(phases.size()))) {}

Eigen::MatrixXd likelihood_table(const SpinState& state, const HypothesisSet& hyp) {
  Eigen::MatrixXd table(hyp.size(), state.outcome_count());
  for (Eigen::Index i = 0; i < hyp.size(); ++i) {
    table.row(i) = outcome_distribution(state, hyp.phases()[static_cast<std::size_t>(i)]).probs.transpose();
  }
  return table;
}

DecisionRule ml_rule(const Eigen::Ref<const Eigen::MatrixXd>& table, const Eigen::Ref<const Eigen::VectorXd>& priors) {
  if (priors.size() != table.rows()) throw DomainError("ml_rule: priors/table size mismatch");
  DecisionRule rule;
  rule.decide.resize(static_cast<std::size_t>(table.cols()));
  for (Eigen::Index k = 0; k < table.cols(); ++k) {
    Eigen::Index best = 0;
    double best_value = priors(0) * table(0, k);
    for (Eigen::Index i = 1; i < table.rows(); ++i) {
      const double v = priors(i) * table(i, k);
      if (v > best_value) {
        best = i;
        best_value = v;
      }
    }
    rule.decide[static_cast<std::size_t>(k)] = best;
  }
  return rule;
}

ConfusionMatrix confusion_matrix(const Eigen::Ref<const Eigen::MatrixXd>& table, const DecisionRule& rule) {
  if (static_cast<Eigen::Index>(rule.decide.size()) != table.cols()) {
    throw DomainError("confusion_matrix: rule does not cover every outcome");
  }
  ConfusionMatrix cm{Eigen::MatrixXd::Zero(table.rows(), table.rows())};
  for (Eigen::Index k = 0; k < table.cols(); ++k) {
    cm.m.col(rule.decide[static_cast<std::size_t>(k)]) += table.col(k);
  }
  return cm;
}

ConfusionMatrix confusion_matrix(const SpinState& state, const HypothesisSet& hyp) {
  const Eigen::MatrixXd table = likelihood_table(state, hyp);
  return confusion_matrix(table, ml_rule(table, hyp.priors()));
}

double error_probability(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors) {
  const double pe = priors.dot((Eigen::VectorXd::Ones(priors.size()) - cm.m.diagonal()));
  return std::clamp(pe, 0.0, 1.0);
}

double mutual_information(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors) {
  const Eigen::VectorXd q = cm.m.transpose() * priors;
  double mi = 0.0;
  for (Eigen::Index i = 0; i < cm.m.rows(); ++i) {
    if (priors(i) <= 0.0) continue;
    for (Eigen::Index k = 0; k < cm.m.cols(); ++k) {
      const double p = cm.m(i, k);
      if (p > 0.0 && q(k) > 0.0) mi += priors(i) * p * std::log2(p / q(k));
    }
  }
  return std::max(mi, 0.0);
}

double conditional_entropy(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors) {
  const Eigen::VectorXd q = cm.m.transpose() * priors;
  double h = 0.0;
  for (Eigen::Index k = 0; k < cm.m.cols(); ++k) {
    if (q(k) <= 0.0) continue;
    const Eigen::VectorXd posterior = priors.cwiseProduct(cm.m.col(k)) / q(k);
    h += q(k) * shannon_entropy(posterior);
  }
  return h;
}

DiscriminationSummary summarize(const SpinState& state, const HypothesisSet& hyp) {
  const ConfusionMatrix cm = confusion_matrix(state, hyp);
  return {error_probability(cm, hyp.priors()), mutual_information(cm, hyp.priors())};
}

}  // namespace fsi
