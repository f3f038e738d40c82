#include "stressdet/beats.hpp"

#include <cmath>

namespace stressdet {

BeatSequence detect_beats(const TimeSeries& filtered_ppg, double refractory) {
  filtered_ppg.validate();

  BeatSequence beats;
  beats.source_rate = filtered_ppg.rate;

  const Eigen::ArrayXd& v = filtered_ppg.values;
  const Eigen::Index n = v.size();
  if (n < 3) return beats;

  const double mean = v.mean();
  const double sd = std::sqrt((v - mean).square().mean());
  const double threshold = mean + 0.5 * sd;
  if (sd == 0.0) return beats;  // flat signal has no pulse

  double last_time = -1e300;
  double last_value = 0.0;
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (!(v[i] > threshold)) continue;
    if (!(v[i] > v[i - 1] && v[i] >= v[i + 1])) continue;

    // refine the peak time on the 3-point parabola through the neighbors
    const double denom = v[i - 1] - 2.0 * v[i] + v[i + 1];
    double delta = 0.0;
    if (denom != 0.0) {
      delta = 0.5 * (v[i - 1] - v[i + 1]) / denom;
      delta = std::clamp(delta, -0.5, 0.5);
    }
    const double t = filtered_ppg.start_time +
                     (static_cast<double>(i) + delta) / filtered_ppg.rate;

    if (t - last_time < refractory) {
      if (v[i] > last_value) {  // larger peak wins the refractory window
        beats.beat_times.back() = t;
        last_time = t;
        last_value = v[i];
      }
      continue;
    }
    beats.beat_times.push_back(t);
    last_time = t;
    last_value = v[i];
  }
  return beats;
}

NnResult nn_intervals(const BeatSequence& beats) {
  NnResult out;
  for (std::size_t i = 1; i < beats.beat_times.size(); ++i) {
    const double d = beats.beat_times[i] - beats.beat_times[i - 1];
    if (d < kNnMinInterval || d > kNnMaxInterval) {
      ++out.discarded;
      continue;
    }
    out.intervals.push_back({beats.beat_times[i], d});
  }
  return out;
}

}  // namespace stressdet
