#include "stressdet/features.hpp"

#include <cmath>

namespace stressdet {

int feature_index(std::string_view name) {
  for (int i = 0; i < kNumFeatures; ++i) {
    if (kFeatureNames[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

namespace {

bool is_binary(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

void validate_feature_vector(const FeatureVector& v) {
  if (!v.x.allFinite()) {
    throw SchemaError("feature vector contains a non-finite entry");
  }
  const double voiced = v.x[feature_index("voiced")];
  const double unvoiced = v.x[feature_index("unvoiced")];
  if (!is_binary(voiced) || !is_binary(unvoiced) || voiced + unvoiced != 1.0) {
    throw SchemaError("voiced/unvoiced must be complementary binary flags");
  }
  static const std::array<const char*, 16> nonneg = {
      "hz0_f", "amp0_f", "hz1_f", "amp1_f", "hz2_f", "amp2_f", "hz3_f", "amp3_f",
      "hz0_b", "amp0_b", "hz1_b", "amp1_b", "hz2_b", "amp2_b", "hz3_b", "amp3_b"};
  for (const char* name : nonneg) {
    if (v.x[feature_index(name)] < 0.0) {
      throw SchemaError(std::string("feature ") + name + " must be >= 0");
    }
  }
}

}  // namespace stressdet
