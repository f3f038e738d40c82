#include "stressdet/ppg_template.hpp"

#include <cmath>
#include <deque>

namespace stressdet {

namespace {

// linear interpolation of a uniform series at time t, clamped at the edges
double sample_at(const TimeSeries& s, double t) {
  const double pos = (t - s.start_time) * s.rate;
  if (pos <= 0.0) return s.values[0];
  const auto last = static_cast<double>(s.size() - 1);
  if (pos >= last) return s.values[s.size() - 1];
  const auto i = static_cast<Eigen::Index>(pos);
  const double frac = pos - static_cast<double>(i);
  return s.values[i] * (1.0 - frac) + s.values[i + 1] * frac;
}

Eigen::ArrayXd resample_segment(const TimeSeries& s, double t0, double t1, int points) {
  Eigen::ArrayXd seg(points);
  for (int k = 0; k < points; ++k) {
    const double t = t0 + (t1 - t0) * static_cast<double>(k) / points;
    seg[k] = sample_at(s, t);
  }
  return seg;
}

}  // namespace

double normalized_cross_correlation(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  const Eigen::ArrayXd da = a - a.mean();
  const Eigen::ArrayXd db = b - b.mean();
  const double denom = std::sqrt(da.square().sum() * db.square().sum());
  if (denom == 0.0) return 0.0;
  return std::clamp((da * db).sum() / denom, -1.0, 1.0);
}

TimeSeries ppg_template_similarity(const TimeSeries& filtered_ppg,
                                   const BeatSequence& beats, double out_rate,
                                   double span_start, double span_end,
                                   int template_beats, int template_points) {
  filtered_ppg.validate();
  if (out_rate <= 0.0) throw ConfigError("template output rate must be > 0");
  if (template_beats < 1 || template_points < 2) {
    throw ConfigError("template needs >= 1 beat and >= 2 points");
  }

  TimeSeries out;
  out.channel_name = "ppg_t";
  out.start_time = span_start;
  out.rate = out_rate;
  if (span_end < span_start) return out;

  // (time, score) events at each completed segment, compared before the
  // segment joins the template buffer
  std::vector<std::pair<double, double>> events;
  std::deque<Eigen::ArrayXd> buffer;
  Eigen::ArrayXd buffer_sum = Eigen::ArrayXd::Zero(template_points);
  for (std::size_t k = 0; k + 1 < beats.beat_times.size(); ++k) {
    const double t0 = beats.beat_times[k];
    const double t1 = beats.beat_times[k + 1];
    Eigen::ArrayXd seg = resample_segment(filtered_ppg, t0, t1, template_points);
    if (!buffer.empty()) {
      const Eigen::ArrayXd tmpl = buffer_sum / static_cast<double>(buffer.size());
      events.emplace_back(t1, normalized_cross_correlation(seg, tmpl));
    }
    buffer.push_back(seg);
    buffer_sum += seg;
    if (static_cast<int>(buffer.size()) > template_beats) {
      buffer_sum -= buffer.front();
      buffer.pop_front();
    }
  }

  const auto ticks =
      static_cast<Eigen::Index>(std::floor((span_end - span_start) * out_rate + 1e-9)) + 1;
  out.values = Eigen::ArrayXd::Zero(ticks);
  std::size_t next_event = 0;
  double current = 0.0;
  for (Eigen::Index i = 0; i < ticks; ++i) {
    const double t = span_start + static_cast<double>(i) / out_rate;
    while (next_event < events.size() && events[next_event].first <= t) {
      current = events[next_event].second;
      ++next_event;
    }
    out.values[i] = current;
  }
  return out;
}

TimeSeries ppg_template_similarity(const TimeSeries& filtered_ppg,
                                   const BeatSequence& beats, double out_rate) {
  double t0 = filtered_ppg.start_time;
  double t1 = filtered_ppg.empty() ? t0 : filtered_ppg.end_time();
  return ppg_template_similarity(filtered_ppg, beats, out_rate, t0, t1);
}

}  // namespace stressdet
