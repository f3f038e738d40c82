#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <string_view>

#include "stressdet/errors.hpp"

namespace stressdet {

inline constexpr int kNumPhysFeatures = 5;
inline constexpr int kNumBadgeFeatures = 31;
inline constexpr int kNumFeatures = kNumPhysFeatures + kNumBadgeFeatures;

// Canonical feature order. Model files, dataset.csv columns and rankings all
// index against this table, so it is fixed.
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    // physiological
    "eda", "eda_f", "ppg", "ppg_t", "hrv",
    // badge: movement / posture
    "bm", "bm_act", "bm_r", "pos_act", "pos_r", "pos_lr", "pos_fb",
    // badge: speech activity
    "voiced", "unvoiced", "vol_f", "vol_b", "volc_f", "volc_b",
    // badge: spectral peaks, front then back
    "hz0_f", "amp0_f", "hz1_f", "amp1_f", "hz2_f", "amp2_f", "hz3_f", "amp3_f",
    "hz0_b", "amp0_b", "hz1_b", "amp1_b", "hz2_b", "amp2_b", "hz3_b", "amp3_b",
    // badge: pitch
    "pitch_f", "pitch_b"};

using FeatureArray = Eigen::Matrix<double, kNumFeatures, 1>;

// One fused 36-dimensional sample.
struct FeatureVector {
  double timestamp = 0.0;  // seconds
  FeatureArray x = FeatureArray::Zero();
};

// -1 if the name is not a known feature
int feature_index(std::string_view name);

// throws SchemaError on any violated invariant
void validate_feature_vector(const FeatureVector& v);

}  // namespace stressdet
