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

// Maximum-likelihood discrimination of M candidate phases from a single
// photon-difference measurement, and the information-theoretic figures of
// merit of the resulting decision channel.

#ifndef FSI_DISCRIMINATION_HPP
#define FSI_DISCRIMINATION_HPP

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "fsi/spin_core.hpp"

namespace fsi {

/// M >= 2 candidate phases with prior probabilities. Phases must be pairwise
/// distinct modulo 2 pi and priors must sum to one.
class HypothesisSet {
 public:
  HypothesisSet(std::vector<double> phases, Eigen::VectorXd priors);
  /// Equiprobable hypotheses.
  explicit HypothesisSet(std::vector<double> phases);

  Eigen::Index size() const { return static_cast<Eigen::Index>(phases_.size()); }
  const std::vector<double>& phases() const { return phases_; }
  const Eigen::VectorXd& priors() const { return priors_; }

 private:
  std::vector<double> phases_;
  Eigen::VectorXd priors_;
};

/// Outcome-to-hypothesis map; decide[k] is the hypothesis chosen on outcome k.
struct DecisionRule {
  std::vector<Eigen::Index> decide;
};

/// decided x true: entry (i, k) = P(decide k | true i). Rows are stochastic.
struct ConfusionMatrix {
  Eigen::MatrixXd m;
};

/// Row i is the outcome distribution at phase i (M x (2j+1)).
Eigen::MatrixXd likelihood_table(const SpinState& state, const HypothesisSet& hyp);

/// argmax_i priors_i P(outcome | i); exact ties go to the lowest index.
DecisionRule ml_rule(const Eigen::Ref<const Eigen::MatrixXd>& table, const Eigen::Ref<const Eigen::VectorXd>& priors);

ConfusionMatrix confusion_matrix(const Eigen::Ref<const Eigen::MatrixXd>& table, const DecisionRule& rule);
ConfusionMatrix confusion_matrix(const SpinState& state, const HypothesisSet& hyp);

/// Average error sum_i p_i (1 - cm(i,i)).
double error_probability(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors);

/// Shannon entropy in bits with 0 log 0 = 0.
template <typename Derived>
typename Derived::Scalar shannon_entropy(const Eigen::DenseBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  Scalar h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Scalar v = p.derived().coeff(i);
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

/// I(theta; theta_hat) = sum_i p_i sum_k cm(i,k) log2(cm(i,k) / q_k), q = cm^T p.
double mutual_information(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors);

/// H(theta | theta_hat) from the Bayes-inverted posterior P(i | k) = p_i cm(i,k) / q_k.
double conditional_entropy(const ConfusionMatrix& cm, const Eigen::Ref<const Eigen::VectorXd>& priors);

/// Error probability and mutual information of the ML decoder in one pass.
struct DiscriminationSummary {
  double pe = 0.0;
  double mi = 0.0;
};
DiscriminationSummary summarize(const SpinState& state, const HypothesisSet& hyp);

}  // namespace fsi

#endif  // FSI_DISCRIMINATION_HPP
