#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stressdet/errors.hpp"

namespace stressdet {

// Depth-1 threshold classifier on a single feature:
// h(x) = polarity if x[feature] > threshold else -polarity.
struct DecisionStump {
  int feature_index = 0;
  double threshold = 0.0;
  int polarity = +1;  // +-1
  double weight = 0.0;  // ensemble vote weight, set by the booster

  int predict(double value) const {
    return value > threshold ? polarity : -polarity;
  }
};

struct StumpFit {
  DecisionStump stump;
  double error = 0.0;  // weighted 0/1 error at the optimum
};

// Weighted optimal stump for one feature column. Candidate thresholds are
// -inf, the midpoints between consecutive distinct sorted values, and +inf;
// ties resolve to the smallest threshold, then polarity +1.
StumpFit train_stump(const Eigen::VectorXd& values, const Eigen::VectorXd& weights,
                     const Eigen::VectorXi& y, int feature_index);

// Hot-path variant with a precomputed ascending sort order of `values`.
StumpFit train_stump_sorted(const Eigen::VectorXd& values,
                            const std::vector<int>& order,
                            const Eigen::VectorXd& weights, const Eigen::VectorXi& y,
                            int feature_index);

}  // namespace stressdet
