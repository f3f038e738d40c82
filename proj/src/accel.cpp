#include "stressdet/accel.hpp"

#include <cmath>

namespace stressdet {

namespace {

constexpr double kRadToDeg = 57.29577951308232;

// per-tick block means of an arbitrary expression over the accel grid
struct TickBlocks {
  Eigen::Index ticks = 0;
  double samples_per_tick = 0.0;
};

TickBlocks tick_layout(const AccelStream& accel, double out_rate) {
  if (accel.rate < out_rate) {
    throw ConfigError("accel rate must be >= feature output rate");
  }
  TickBlocks tb;
  tb.samples_per_tick = accel.rate / out_rate;
  tb.ticks = static_cast<Eigen::Index>(
      std::floor(static_cast<double>(accel.size()) / tb.samples_per_tick + 1e-9));
  return tb;
}

Eigen::ArrayXd block_mean(const Eigen::ArrayXd& v, const TickBlocks& tb) {
  Eigen::ArrayXd out(tb.ticks);
  for (Eigen::Index i = 0; i < tb.ticks; ++i) {
    const auto lo = static_cast<Eigen::Index>(std::ceil(i * tb.samples_per_tick - 1e-9));
    auto hi = static_cast<Eigen::Index>(std::ceil((i + 1) * tb.samples_per_tick - 1e-9));
    hi = std::min(hi, v.size());
    out[i] = v.segment(lo, hi - lo).mean();
  }
  return out;
}

TimeSeries make_series(const char* name, const AccelStream& accel, double rate,
                       Eigen::ArrayXd values) {
  return TimeSeries(name, accel.start_time, rate, std::move(values));
}

}  // namespace

std::vector<TimeSeries> movement_features(const AccelStream& accel, double out_rate) {
  accel.validate();
  if (accel.size() == 0) {
    return {TimeSeries("bm", accel.start_time, out_rate, {}),
            TimeSeries("bm_act", accel.start_time, out_rate, {}),
            TimeSeries("bm_r", accel.start_time, out_rate, {})};
  }
  const TickBlocks tb = tick_layout(accel, out_rate);
  const Eigen::ArrayXd energy =
      block_mean(accel.ax.square() + accel.ay.square() + accel.az.square(), tb);

  Eigen::ArrayXd bm = energy.sqrt();  // magnitude relative to the 1 g rest level
  Eigen::ArrayXd bm_act = Eigen::ArrayXd::Zero(tb.ticks);
  Eigen::ArrayXd bm_r = Eigen::ArrayXd::Zero(tb.ticks);
  for (Eigen::Index i = 1; i < tb.ticks; ++i) {
    bm_act[i] = std::abs(energy[i] - energy[i - 1]) * out_rate;
  }
  for (Eigen::Index i = 2; i < tb.ticks; ++i) {
    bm_r[i] = (energy[i] - 2.0 * energy[i - 1] + energy[i - 2]) * out_rate * out_rate;
  }

  std::vector<TimeSeries> out;
  out.push_back(make_series("bm", accel, out_rate, std::move(bm)));
  out.push_back(make_series("bm_act", accel, out_rate, std::move(bm_act)));
  out.push_back(make_series("bm_r", accel, out_rate, std::move(bm_r)));
  return out;
}

std::vector<TimeSeries> posture_features(const AccelStream& accel, double out_rate,
                                         const PostureParams& params) {
  accel.validate();
  if (accel.size() == 0) {
    return {TimeSeries("pos_lr", accel.start_time, out_rate, {}),
            TimeSeries("pos_fb", accel.start_time, out_rate, {}),
            TimeSeries("pos_act", accel.start_time, out_rate, {}),
            TimeSeries("pos_r", accel.start_time, out_rate, {})};
  }
  const TickBlocks tb = tick_layout(accel, out_rate);
  const Eigen::ArrayXd mx = block_mean(accel.ax, tb);
  const Eigen::ArrayXd my = block_mean(accel.ay, tb);
  const Eigen::ArrayXd mz = block_mean(accel.az, tb);

  Eigen::ArrayXd lr(tb.ticks), fb(tb.ticks), tilt(tb.ticks);
  for (Eigen::Index i = 0; i < tb.ticks; ++i) {
    lr[i] = std::atan2(mx[i], mz[i]) * kRadToDeg;
    fb[i] = std::atan2(my[i], mz[i]) * kRadToDeg;
    tilt[i] = std::atan2(std::hypot(mx[i], my[i]), mz[i]) * kRadToDeg;
  }

  const std::vector<Biquad> smoother = design_filter(params.angle_smoother, out_rate);
  lr = filter_forward_backward(smoother, lr);
  fb = filter_forward_backward(smoother, fb);
  tilt = filter_forward_backward(smoother, tilt);

  Eigen::ArrayXd pos_act = Eigen::ArrayXd::Zero(tb.ticks);
  Eigen::ArrayXd pos_r = Eigen::ArrayXd::Zero(tb.ticks);
  for (Eigen::Index i = 1; i < tb.ticks; ++i) {
    pos_act[i] = std::abs(tilt[i] - tilt[i - 1]) * out_rate;
  }
  for (Eigen::Index i = 2; i < tb.ticks; ++i) {
    pos_r[i] = (tilt[i] - 2.0 * tilt[i - 1] + tilt[i - 2]) * out_rate * out_rate;
  }

  std::vector<TimeSeries> out;
  out.push_back(make_series("pos_lr", accel, out_rate, std::move(lr)));
  out.push_back(make_series("pos_fb", accel, out_rate, std::move(fb)));
  out.push_back(make_series("pos_act", accel, out_rate, std::move(pos_act)));
  out.push_back(make_series("pos_r", accel, out_rate, std::move(pos_r)));
  return out;
}

}  // namespace stressdet
