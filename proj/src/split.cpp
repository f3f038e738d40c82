#include "stressdet/split.hpp"

#include <algorithm>
#include <cmath>

#include "stressdet/rng.hpp"

namespace stressdet {

namespace {

LabeledDataset take_rows(const LabeledDataset& src, const std::vector<Eigen::Index>& rows) {
  LabeledDataset out;
  out.participant_id = src.participant_id;
  out.feature_names = src.feature_names;
  out.timestamps.resize(static_cast<Eigen::Index>(rows.size()));
  out.features.resize(static_cast<Eigen::Index>(rows.size()), src.features.cols());
  out.labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Eigen::Index r = rows[i];
    out.timestamps[static_cast<Eigen::Index>(i)] = src.timestamps[r];
    out.features.row(static_cast<Eigen::Index>(i)) = src.features.row(r);
    out.labels.push_back(src.labels[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace

SplitResult stratified_split(const LabeledDataset& data, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0, 1)");
  }
  data.validate_for_training();

  std::vector<Eigen::Index> by_class[2];
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    by_class[data.labels[static_cast<std::size_t>(i)] == Label::kStress ? 0 : 1]
        .push_back(i);
  }

  Rng rng(spec.seed);
  std::vector<Eigen::Index> train_rows, test_rows;
  for (auto& idx : by_class) {
    const auto want = static_cast<std::size_t>(
        std::lround(spec.train_fraction * static_cast<double>(idx.size())));
    if (want == 0 || want == idx.size()) {
      throw TrainingError("stratified split leaves an empty part for one class");
    }
    rng.shuffle(idx);
    train_rows.insert(train_rows.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(want));
    test_rows.insert(test_rows.end(), idx.begin() + static_cast<std::ptrdiff_t>(want), idx.end());
  }
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());

  return {take_rows(data, train_rows), take_rows(data, test_rows)};
}

}  // namespace stressdet
