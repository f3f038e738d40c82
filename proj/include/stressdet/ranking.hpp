#pragma once

#include <string>
#include <vector>

#include "stressdet/adaboost.hpp"

namespace stressdet {

// First top_k stump features in selection order (rank 1 = first selected).
// Repeats are kept: the list is the stump prefix, not a set.
std::vector<std::string> rank_features(const StumpEnsemble& model,
                                       const std::vector<std::string>& feature_names,
                                       int top_k = 5);

struct FeatureFrequency {
  std::string name;
  int appearances = 0;
  double percent = 0.0;  // of participants * top_k slots
};

// Appearance frequency of each feature across the cohort's per-participant
// top-k lists, descending (ties keep the canonical feature order).
std::vector<FeatureFrequency> cohort_frequencies(
    const std::vector<StumpEnsemble>& models,
    const std::vector<std::string>& feature_names, int top_k = 5);

}  // namespace stressdet
