#pragma once

#include <cstdint>

#include "stressdet/dataset.hpp"

namespace stressdet {

struct SplitSpec {
  double train_fraction = 0.75;
  std::uint64_t seed = 0;
};

struct SplitResult {
  LabeledDataset train;
  LabeledDataset test;
};

// Random stratified split: per class, round(train_fraction * count) rows go
// to train, the rest to test, so both parts keep the source class
// distribution. Deterministic under the seed; row order inside each part
// stays chronological. Throws TrainingError when a class is absent or a part
// would come out empty.
SplitResult stratified_split(const LabeledDataset& data, const SplitSpec& spec);

}  // namespace stressdet
