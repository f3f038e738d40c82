#include "stressdet/stump.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stressdet {

StumpFit train_stump(const Eigen::VectorXd& values, const Eigen::VectorXd& weights,
                     const Eigen::VectorXi& y, int feature_index) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  return train_stump_sorted(values, order, weights, y, feature_index);
}

StumpFit train_stump_sorted(const Eigen::VectorXd& values,
                            const std::vector<int>& order,
                            const Eigen::VectorXd& weights, const Eigen::VectorXi& y,
                            int feature_index) {
  const Eigen::Index n = values.size();
  if (n == 0 || weights.size() != n || y.size() != n ||
      order.size() != static_cast<std::size_t>(n)) {
    throw SchemaError("stump training: inconsistent input sizes");
  }

  double w_plus = 0.0, w_minus = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    (y[i] > 0 ? w_plus : w_minus) += weights[i];
  }

  StumpFit best;
  best.stump.feature_index = feature_index;
  best.error = std::numeric_limits<double>::infinity();

  // error of "predict pol above thr" given the weight mass At/Bt of +/- rows
  // at or below thr
  auto consider = [&](double thr, double below_plus, double below_minus) {
    const double e_plus = below_plus + (w_minus - below_minus);
    const double e_minus = (w_plus - below_plus) + below_minus;
    const int pol = e_plus <= e_minus ? +1 : -1;
    const double e = std::min(e_plus, e_minus);
    if (e < best.error) {  // ties keep the earlier (smaller) threshold
      best.error = e;
      best.stump.threshold = thr;
      best.stump.polarity = pol;
    }
  };

  consider(-std::numeric_limits<double>::infinity(), 0.0, 0.0);

  double below_plus = 0.0, below_minus = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double v = values[order[i]];
    while (i < order.size() && values[order[i]] == v) {
      const int idx = order[i];
      (y[idx] > 0 ? below_plus : below_minus) += weights[idx];
      ++i;
    }
    if (i < order.size()) {
      const double next = values[order[i]];
      double thr = 0.5 * (v + next);
      if (!(thr < next)) thr = v;  // adjacent doubles: keep x > thr consistent
      consider(thr, below_plus, below_minus);
    }
  }

  consider(std::numeric_limits<double>::infinity(), w_plus, w_minus);
  return best;
}

}  // namespace stressdet
