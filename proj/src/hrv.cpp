#include "stressdet/hrv.hpp"

#include <cmath>

namespace stressdet {

TimeSeries compute_hrv(const BeatSequence& beats, double window, double out_rate,
                       double span_start, double span_end) {
  if (window <= 0.0) throw ConfigError("hrv window must be > 0");
  if (out_rate <= 0.0) throw ConfigError("hrv output rate must be > 0");

  TimeSeries out;
  out.channel_name = "hrv";
  out.start_time = span_start;
  out.rate = out_rate;
  if (span_end < span_start) return out;

  const NnResult nn = nn_intervals(beats);
  const auto ticks =
      static_cast<Eigen::Index>(std::floor((span_end - span_start) * out_rate + 1e-9)) + 1;
  out.values = Eigen::ArrayXd::Zero(ticks);

  std::size_t lo = 0, hi = 0;  // window [t - window, t] over interval end times
  double sum = 0.0, sumsq = 0.0;
  double last_valid = 0.0;
  for (Eigen::Index i = 0; i < ticks; ++i) {
    const double t = span_start + static_cast<double>(i) / out_rate;
    while (hi < nn.intervals.size() && nn.intervals[hi].end_time <= t) {
      sum += nn.intervals[hi].duration;
      sumsq += nn.intervals[hi].duration * nn.intervals[hi].duration;
      ++hi;
    }
    while (lo < hi && nn.intervals[lo].end_time < t - window) {
      sum -= nn.intervals[lo].duration;
      sumsq -= nn.intervals[lo].duration * nn.intervals[lo].duration;
      ++lo;
    }
    const std::size_t count = hi - lo;
    if (count >= 2) {
      const double mean = sum / static_cast<double>(count);
      const double var = std::max(0.0, sumsq / static_cast<double>(count) - mean * mean);
      last_valid = std::sqrt(var);
    }
    out.values[i] = last_valid;
  }
  return out;
}

TimeSeries compute_hrv(const BeatSequence& beats, double window, double out_rate) {
  if (beats.empty()) {
    TimeSeries out;
    out.channel_name = "hrv";
    out.rate = out_rate;
    return out;
  }
  return compute_hrv(beats, window, out_rate, beats.beat_times.front(),
                     beats.beat_times.back());
}

}  // namespace stressdet
