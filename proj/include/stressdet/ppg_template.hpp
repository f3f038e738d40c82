#pragma once

#include "stressdet/beats.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

// Pulse-shape consistency score. Each beat-to-beat segment of the filtered
// pulse wave is resampled to kTemplatePoints and compared (normalized
// cross-correlation, in [-1, 1]) against the running template, the mean of
// the previous kTemplateBeats segments. The 10 Hz output holds the latest
// score; 0 before the first comparison.
inline constexpr int kTemplateBeats = 8;
inline constexpr int kTemplatePoints = 64;

TimeSeries ppg_template_similarity(const TimeSeries& filtered_ppg,
                                   const BeatSequence& beats, double out_rate,
                                   double span_start, double span_end,
                                   int template_beats = kTemplateBeats,
                                   int template_points = kTemplatePoints);

TimeSeries ppg_template_similarity(const TimeSeries& filtered_ppg,
                                   const BeatSequence& beats,
                                   double out_rate = 10.0);

// zero-mean normalized cross-correlation of two equal-length vectors
double normalized_cross_correlation(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b);

}  // namespace stressdet
