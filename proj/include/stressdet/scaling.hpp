#pragma once

#include <Eigen/Dense>

#include "stressdet/dataset.hpp"

namespace stressdet {

// Per-feature [min, max] learned from training rows. Features that are
// constant on the training set (max == min) always map to 0.
struct ScalerParams {
  Eigen::VectorXd min;
  Eigen::VectorXd max;
};

struct ScaledSplit {
  LabeledDataset train;
  LabeledDataset test;
  ScalerParams params;
};

ScalerParams fit_unit_range(const LabeledDataset& train);

// x' = 2 (x - min) / (max - min) - 1. Values outside the training range land
// outside [-1, 1]; they are not clamped.
Eigen::MatrixXd apply_unit_range(const Eigen::MatrixXd& features,
                                 const ScalerParams& params);
Eigen::VectorXd apply_unit_range(const Eigen::VectorXd& row, const ScalerParams& params);

// Fits on train only, transforms both parts.
ScaledSplit scale_to_unit_range(const LabeledDataset& train, const LabeledDataset& test);

}  // namespace stressdet
