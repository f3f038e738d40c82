#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "stressdet/errors.hpp"

namespace stressdet {

// Uniformly sampled channel of real values. Sample i sits at
// start_time + i / rate, so timestamps are strictly increasing by
// construction.
struct TimeSeries {
  std::string channel_name;
  double start_time = 0.0;  // seconds
  double rate = 0.0;        // Hz
  Eigen::ArrayXd values;

  TimeSeries() = default;
  TimeSeries(std::string name, double start, double rate_hz, Eigen::ArrayXd v)
      : channel_name(std::move(name)),
        start_time(start),
        rate(rate_hz),
        values(std::move(v)) {}

  Eigen::Index size() const { return values.size(); }
  bool empty() const { return values.size() == 0; }

  double time_at(Eigen::Index i) const { return start_time + static_cast<double>(i) / rate; }

  // timestamp of the last sample; series must be non-empty
  double end_time() const { return time_at(values.size() - 1); }

  void validate() const {
    if (rate <= 0.0) {
      throw SchemaError("channel '" + channel_name + "': rate must be > 0");
    }
    if (!values.allFinite()) {
      throw SchemaError("channel '" + channel_name + "': non-finite sample");
    }
  }
};

}  // namespace stressdet
