#include "stressdet/grid_search.hpp"

#include <cmath>

namespace stressdet {

std::vector<double> default_c_grid() {
  std::vector<double> g;
  for (int e = -5; e <= 15; e += 2) g.push_back(std::ldexp(1.0, e));
  return g;
}

std::vector<double> default_gamma_grid() {
  std::vector<double> g;
  for (int e = -15; e <= 3; e += 2) g.push_back(std::ldexp(1.0, e));
  return g;
}

GridSearchResult grid_search_cv(const LabeledDataset& train,
                                const std::vector<double>& c_grid,
                                const std::vector<double>& gamma_grid, int folds,
                                const SvmTrainOptions& options) {
  if (c_grid.empty() || gamma_grid.empty()) {
    throw ConfigError("grid search: empty hyperparameter grid");
  }
  if (folds < 2) throw ConfigError("grid search: need at least 2 folds");
  train.validate_for_training();

  // deterministic stratified folds: per class, round robin in row order
  const Eigen::Index n = train.rows();
  std::vector<int> fold_of(static_cast<std::size_t>(n));
  int counter[2] = {0, 0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const int cls = train.labels[static_cast<std::size_t>(i)] == Label::kStress ? 0 : 1;
    fold_of[static_cast<std::size_t>(i)] = counter[cls] % folds;
    ++counter[cls];
  }

  // materialize fold partitions once
  std::vector<std::vector<Eigen::Index>> fold_rows(static_cast<std::size_t>(folds));
  for (Eigen::Index i = 0; i < n; ++i) {
    fold_rows[static_cast<std::size_t>(fold_of[static_cast<std::size_t>(i)])].push_back(i);
  }

  struct Fold {
    Eigen::MatrixXd train_x, test_x;
    Eigen::VectorXi train_y;
    std::vector<Label> test_labels;
  };
  std::vector<Fold> parts;
  const Eigen::VectorXi y = train.signs();
  for (int f = 0; f < folds; ++f) {
    Fold part;
    const auto& held = fold_rows[static_cast<std::size_t>(f)];
    if (held.empty()) throw TrainingError("grid search: a fold came out empty");
    const Eigen::Index held_n = static_cast<Eigen::Index>(held.size());
    part.test_x.resize(held_n, train.features.cols());
    for (Eigen::Index k = 0; k < held_n; ++k) {
      part.test_x.row(k) = train.features.row(held[static_cast<std::size_t>(k)]);
      part.test_labels.push_back(train.labels[static_cast<std::size_t>(held[static_cast<std::size_t>(k)])]);
    }
    part.train_x.resize(n - held_n, train.features.cols());
    part.train_y.resize(n - held_n);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (fold_of[static_cast<std::size_t>(i)] == f) continue;
      part.train_x.row(r) = train.features.row(i);
      part.train_y[r] = y[i];
      ++r;
    }
    if ((part.train_y.array() > 0).count() == 0 || (part.train_y.array() < 0).count() == 0) {
      throw TrainingError("grid search: a fold's training part lost a class");
    }
    parts.push_back(std::move(part));
  }

  GridSearchResult result;
  result.best_accuracy = -1.0;
  for (double c : c_grid) {
    for (double gamma : gamma_grid) {
      KernelSpec spec{KernelSpec::Kind::kRbf, c, gamma};
      long correct = 0;
      for (const Fold& part : parts) {
        const SvmModel model = train_rbf_svm(part.train_x, part.train_y, spec, options);
        const std::vector<Label> pred = predict_svm(model, part.test_x);
        for (std::size_t k = 0; k < pred.size(); ++k) {
          if (pred[k] == part.test_labels[k]) ++correct;
        }
      }
      const double acc = static_cast<double>(correct) / static_cast<double>(n);
      result.table.emplace_back(c, gamma, acc);
      if (acc > result.best_accuracy) {  // strict: ties keep smaller C, then gamma
        result.best_accuracy = acc;
        result.best = spec;
      }
    }
  }
  return result;
}

}  // namespace stressdet
