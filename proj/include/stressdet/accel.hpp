#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stressdet/filters.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

// Raw 3-axis badge accelerometer stream in g units.
struct AccelStream {
  double start_time = 0.0;
  double rate = 0.0;  // Hz
  Eigen::ArrayXd ax, ay, az;

  Eigen::Index size() const { return ax.size(); }

  void validate() const {
    if (rate <= 0.0) throw SchemaError("accel stream: rate must be > 0");
    if (ax.size() != ay.size() || ax.size() != az.size()) {
      throw SchemaError("accel stream: axis lengths differ");
    }
    if (!ax.allFinite() || !ay.allFinite() || !az.allFinite()) {
      throw SchemaError("accel stream: non-finite sample");
    }
  }
};

struct PostureParams {
  FilterSpec angle_smoother = {FilterSpec::Kind::kLowPass, 0.0, 0.5, 2, true};
};

// Body-movement channels on the out_rate grid. Per tick window:
// E = mean(ax^2+ay^2+az^2); bm = sqrt(E) against the 1 g rest level;
// bm_act = |dE/dt| and bm_r = d2E/dt2 as finite differences on the grid,
// 0 while undefined.
std::vector<TimeSeries> movement_features(const AccelStream& accel,
                                          double out_rate = 10.0);

// Posture channels: pos_lr = atan2(ax, az), pos_fb = atan2(ay, az) in
// degrees (0.5 Hz smoothed); pos_act = |d(tilt)/dt| deg/s and
// pos_r = d2(tilt)/dt2 of the total tilt angle, 0 while undefined.
std::vector<TimeSeries> posture_features(const AccelStream& accel,
                                         double out_rate = 10.0,
                                         const PostureParams& params = {});

}  // namespace stressdet
