#include "stressdet/scaling.hpp"

namespace stressdet {

ScalerParams fit_unit_range(const LabeledDataset& train) {
  if (train.rows() == 0) throw TrainingError("cannot fit a scaler on an empty set");
  ScalerParams p;
  p.min = train.features.colwise().minCoeff();
  p.max = train.features.colwise().maxCoeff();
  return p;
}

Eigen::MatrixXd apply_unit_range(const Eigen::MatrixXd& features,
                                 const ScalerParams& params) {
  if (features.cols() != params.min.size()) {
    throw SchemaError("scaler dimension does not match the feature count");
  }
  Eigen::MatrixXd out(features.rows(), features.cols());
  for (Eigen::Index c = 0; c < features.cols(); ++c) {
    const double lo = params.min[c];
    const double span = params.max[c] - lo;
    if (span == 0.0) {
      out.col(c).setZero();
    } else {
      out.col(c) = (features.col(c).array() - lo) * (2.0 / span) - 1.0;
    }
  }
  return out;
}

Eigen::VectorXd apply_unit_range(const Eigen::VectorXd& row, const ScalerParams& params) {
  if (row.size() != params.min.size()) {
    throw SchemaError("scaler dimension does not match the feature count");
  }
  Eigen::VectorXd out(row.size());
  for (Eigen::Index c = 0; c < row.size(); ++c) {
    const double span = params.max[c] - params.min[c];
    out[c] = span == 0.0 ? 0.0 : 2.0 * (row[c] - params.min[c]) / span - 1.0;
  }
  return out;
}

ScaledSplit scale_to_unit_range(const LabeledDataset& train, const LabeledDataset& test) {
  ScaledSplit out;
  out.params = fit_unit_range(train);
  out.train = train;
  out.train.features = apply_unit_range(train.features, out.params);
  out.test = test;
  out.test.features = apply_unit_range(test.features, out.params);
  return out;
}

}  // namespace stressdet
