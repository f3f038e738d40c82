#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stressdet/dataset.hpp"

namespace stressdet {

struct KernelSpec {
  enum class Kind { kLinear, kRbf };
  Kind kind = Kind::kLinear;
  double C = 1.0;
  double gamma = 0.0;  // rbf only

  void validate() const {
    if (C <= 0.0) throw ConfigError("svm: C must be > 0");
    if (kind == Kind::kRbf && gamma <= 0.0) throw ConfigError("svm: gamma must be > 0");
  }
};

double kernel_value(const KernelSpec& spec, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b);

// Trained soft-margin classifier: decision value
// f(x) = sum_i dual_coefs[i] * k(sv_i, x) + bias,  dual_coefs[i] = alpha_i y_i.
struct SvmModel {
  KernelSpec kernel;
  Eigen::MatrixXd support_vectors;  // one row per support vector
  Eigen::VectorXd dual_coefs;
  double bias = 0.0;
};

struct SvmTrainOptions {
  double tolerance = 1e-3;
  long max_epochs = 10000;      // linear coordinate-descent epochs
  long max_iterations = -1;     // SMO pair updates; -1 = scaled with n
};

// L1-loss dual coordinate descent with the bias folded in as a unit feature;
// stops when the largest projected-gradient violation in an epoch falls
// below the tolerance. Throws ConvergenceError past max_epochs.
SvmModel train_linear_svm(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                          double C, const SvmTrainOptions& options = {});
SvmModel train_linear_svm(const LabeledDataset& train, double C,
                          const SvmTrainOptions& options = {});

// Two-variable SMO on the RBF dual with maximal-violating-pair selection;
// converged when the KKT gap m(alpha) - M(alpha) <= tolerance.
SvmModel train_rbf_svm(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                       const KernelSpec& spec, const SvmTrainOptions& options = {});
SvmModel train_rbf_svm(const LabeledDataset& train, const KernelSpec& spec,
                       const SvmTrainOptions& options = {});

double svm_decision(const SvmModel& model, const Eigen::VectorXd& x);
Eigen::VectorXd svm_decisions(const SvmModel& model, const Eigen::MatrixXd& features);

// stress iff the decision value is strictly positive
Label predict_svm(const SvmModel& model, const Eigen::VectorXd& x);
std::vector<Label> predict_svm(const SvmModel& model, const Eigen::MatrixXd& features);

}  // namespace stressdet
