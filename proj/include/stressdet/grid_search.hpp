#pragma once

#include <vector>

#include "stressdet/svm.hpp"

namespace stressdet {

// practical geometric grids: C = 2^-5..2^15, gamma = 2^-15..2^3, step 2^2
std::vector<double> default_c_grid();
std::vector<double> default_gamma_grid();

struct GridSearchResult {
  KernelSpec best;
  double best_accuracy = 0.0;
  // cv accuracy per (C, gamma) pair in grid iteration order
  std::vector<std::tuple<double, double, double>> table;
};

// Stratified k-fold cross-validated accuracy over the (C, gamma) grid for
// the RBF kernel; the argmax wins, ties resolve to smaller C then smaller
// gamma. Fold assignment is deterministic (per-class round robin).
GridSearchResult grid_search_cv(const LabeledDataset& train,
                                const std::vector<double>& c_grid,
                                const std::vector<double>& gamma_grid, int folds = 5,
                                const SvmTrainOptions& options = {});

}  // namespace stressdet
