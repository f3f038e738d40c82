#pragma once

#include <vector>

#include "stressdet/dataset.hpp"
#include "stressdet/stump.hpp"

namespace stressdet {

// Ordered boosted ensemble; the selection order doubles as the feature
// ranking, so it is preserved verbatim.
struct StumpEnsemble {
  std::vector<DecisionStump> stumps;
  int T = 0;                         // requested round budget
  std::vector<double> round_errors;  // weighted error of each admitted round

  bool empty() const { return stumps.empty(); }
};

// largest admissible vote weight, used when a round classifies perfectly
double adaboost_alpha_cap();

// Discrete AdaBoost over one-dimensional stumps: each round fits the best
// stump across every feature, weighs it by alpha = 0.5 ln((1-e)/e) and
// reweights the rows. A perfect round is admitted with the capped alpha and
// stops training; a round with e >= 0.5 is discarded and stops training.
StumpEnsemble train_adaboost(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                             int rounds);
StumpEnsemble train_adaboost(const LabeledDataset& train, int rounds);

// signed vote sum; positive means stress
double ensemble_margin(const StumpEnsemble& model, const Eigen::VectorXd& x);

// stress iff the margin is strictly positive (zero resolves to neutral)
Label predict_ensemble(const StumpEnsemble& model, const Eigen::VectorXd& x);

std::vector<Label> predict_ensemble(const StumpEnsemble& model,
                                    const Eigen::MatrixXd& features);

}  // namespace stressdet
