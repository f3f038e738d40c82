#include "stressdet/resample.hpp"

#include <cmath>

namespace stressdet {

TimeSeries downsample(const TimeSeries& series, double out_rate) {
  series.validate();
  if (out_rate <= 0.0) throw ConfigError("output rate must be > 0");

  const double ratio = series.rate / out_rate;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio) {
    throw ConfigError("downsample requires an integer rate ratio, got " +
                      std::to_string(ratio));
  }
  const auto m = static_cast<Eigen::Index>(rounded);

  TimeSeries out;
  out.channel_name = series.channel_name;
  out.start_time = series.start_time;
  out.rate = out_rate;

  const Eigen::Index blocks = series.size() / m;
  out.values.resize(blocks);
  for (Eigen::Index i = 0; i < blocks; ++i) {
    out.values[i] = series.values.segment(i * m, m).mean();
  }
  return out;
}

}  // namespace stressdet
