#include "stressdet/ranking.hpp"

#include <algorithm>
#include <map>

namespace stressdet {

std::vector<std::string> rank_features(const StumpEnsemble& model,
                                       const std::vector<std::string>& feature_names,
                                       int top_k) {
  if (model.empty()) throw SchemaError("feature ranking needs a non-empty ensemble");
  if (top_k < 1) throw ConfigError("feature ranking needs top_k >= 1");

  std::vector<std::string> out;
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(top_k),
                                                 model.stumps.size());
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const int f = model.stumps[i].feature_index;
    if (f < 0 || static_cast<std::size_t>(f) >= feature_names.size()) {
      throw SchemaError("ensemble references a feature outside the name table");
    }
    out.push_back(feature_names[static_cast<std::size_t>(f)]);
  }
  return out;
}

std::vector<FeatureFrequency> cohort_frequencies(
    const std::vector<StumpEnsemble>& models,
    const std::vector<std::string>& feature_names, int top_k) {
  if (models.empty()) throw SchemaError("cohort frequencies need at least one model");

  std::map<int, int> counts;  // feature index -> appearances
  for (const StumpEnsemble& m : models) {
    const std::size_t take =
        std::min<std::size_t>(static_cast<std::size_t>(top_k), m.stumps.size());
    for (std::size_t i = 0; i < take; ++i) {
      ++counts[m.stumps[i].feature_index];
    }
  }

  const double denom = static_cast<double>(models.size()) * top_k;
  std::vector<FeatureFrequency> out;
  for (const auto& [f, c] : counts) {
    FeatureFrequency ff;
    ff.name = feature_names.at(static_cast<std::size_t>(f));
    ff.appearances = c;
    ff.percent = 100.0 * static_cast<double>(c) / denom;
    out.push_back(std::move(ff));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.appearances > b.appearances;
  });
  return out;
}

}  // namespace stressdet
