#pragma once

#include <vector>

#include "stressdet/time_series.hpp"

namespace stressdet {

// Detected pulse peaks, strictly increasing times in seconds.
struct BeatSequence {
  std::vector<double> beat_times;
  double source_rate = 0.0;

  std::size_t size() const { return beat_times.size(); }
  bool empty() const { return beat_times.empty(); }
};

// inter-beat interval with the time of its ending beat
struct NnInterval {
  double end_time = 0.0;
  double duration = 0.0;  // seconds
};

struct NnResult {
  std::vector<NnInterval> intervals;
  int discarded = 0;  // intervals outside the physiological range
};

inline constexpr double kNnMinInterval = 0.3;  // seconds
inline constexpr double kNnMaxInterval = 2.0;

// Peak picking on the band-passed pulse wave: local maxima above an adaptive
// threshold, 0.3 s refractory (the larger peak wins inside it), sub-sample
// peak time via 3-point quadratic interpolation. A flat or empty signal
// yields an empty sequence.
BeatSequence detect_beats(const TimeSeries& filtered_ppg,
                          double refractory = 0.3);

// Normal-to-normal intervals: consecutive beat gaps inside
// [kNnMinInterval, kNnMaxInterval]; out-of-range gaps are counted and dropped.
NnResult nn_intervals(const BeatSequence& beats);

}  // namespace stressdet
