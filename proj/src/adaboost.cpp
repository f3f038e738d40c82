#include "stressdet/adaboost.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stressdet {

double adaboost_alpha_cap() {
  constexpr double kEpsFloor = 1e-10;
  return 0.5 * std::log((1.0 - kEpsFloor) / kEpsFloor);
}

StumpEnsemble train_adaboost(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                             int rounds) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (n == 0 || y.size() != n) throw SchemaError("adaboost: inconsistent input sizes");
  if (rounds < 1) throw ConfigError("adaboost needs T >= 1");
  if ((y.array() > 0).count() == 0 || (y.array() < 0).count() == 0) {
    throw TrainingError("adaboost needs both classes in the training set");
  }

  // value order per feature never changes; sort once
  std::vector<std::vector<int>> orders(static_cast<std::size_t>(d));
  for (Eigen::Index f = 0; f < d; ++f) {
    auto& ord = orders[static_cast<std::size_t>(f)];
    ord.resize(static_cast<std::size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return features(a, f) < features(b, f); });
  }

  StumpEnsemble model;
  model.T = rounds;
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));

  for (int t = 0; t < rounds; ++t) {
    StumpFit best;
    best.error = std::numeric_limits<double>::infinity();
    for (Eigen::Index f = 0; f < d; ++f) {
      StumpFit fit = train_stump_sorted(features.col(f), orders[static_cast<std::size_t>(f)],
                                        w, y, static_cast<int>(f));
      if (fit.error < best.error) best = fit;
    }

    const double eps = std::clamp(best.error, 0.0, 1.0);
    if (eps >= 0.5) break;  // no weak learner left, drop the round

    if (eps == 0.0) {
      best.stump.weight = adaboost_alpha_cap();
      model.stumps.push_back(best.stump);
      model.round_errors.push_back(eps);
      break;
    }

    const double alpha = 0.5 * std::log((1.0 - eps) / eps);
    best.stump.weight = alpha;
    model.stumps.push_back(best.stump);
    model.round_errors.push_back(eps);

    for (Eigen::Index i = 0; i < n; ++i) {
      const int h = best.stump.predict(features(i, best.stump.feature_index));
      w[i] *= std::exp(-alpha * static_cast<double>(y[i] * h));
    }
    w /= w.sum();
  }
  return model;
}

StumpEnsemble train_adaboost(const LabeledDataset& train, int rounds) {
  train.validate_for_training();
  return train_adaboost(train.features, train.signs(), rounds);
}

double ensemble_margin(const StumpEnsemble& model, const Eigen::VectorXd& x) {
  double sum = 0.0;
  for (const DecisionStump& s : model.stumps) {
    if (s.feature_index < 0 || s.feature_index >= x.size()) {
      throw SchemaError("ensemble feature index out of range for this input");
    }
    sum += s.weight * static_cast<double>(s.predict(x[s.feature_index]));
  }
  return sum;
}

Label predict_ensemble(const StumpEnsemble& model, const Eigen::VectorXd& x) {
  return ensemble_margin(model, x) > 0.0 ? Label::kStress : Label::kNeutral;
}

std::vector<Label> predict_ensemble(const StumpEnsemble& model,
                                    const Eigen::MatrixXd& features) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(features.rows()));
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    out.push_back(predict_ensemble(model, features.row(i).transpose()));
  }
  return out;
}

}  // namespace stressdet
