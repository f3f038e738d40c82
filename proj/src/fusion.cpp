#include "stressdet/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace stressdet {

namespace {

// one fused channel = pointer to its series, walked with a monotone cursor
struct ChannelCursor {
  const TimeSeries* series = nullptr;
  Eigen::Index pos = 0;

  double value_nearest(double t) {
    const TimeSeries& s = *series;
    const Eigen::Index n = s.size();
    // advance while the next sample is strictly closer (earlier wins ties)
    while (pos + 1 < n &&
           std::abs(s.time_at(pos + 1) - t) < std::abs(s.time_at(pos) - t)) {
      ++pos;
    }
    return s.values[pos];
  }
};

}  // namespace

std::vector<FeatureVector> synchronize(const std::vector<TimeSeries>& phys_channels,
                                       const std::vector<TimeSeries>& badge_channels,
                                       double target_rate) {
  if (target_rate <= 0.0) throw ConfigError("target_rate must be > 0");

  std::array<ChannelCursor, kNumFeatures> cursors;
  auto bind = [&](const std::vector<TimeSeries>& channels) {
    for (const TimeSeries& ch : channels) {
      int idx = feature_index(ch.channel_name);
      if (idx < 0) continue;  // extra channels are ignored
      ch.validate();
      if (ch.empty()) {
        throw SchemaError("channel '" + ch.channel_name + "' is empty");
      }
      cursors[static_cast<std::size_t>(idx)].series = &ch;
    }
  };
  bind(phys_channels);
  bind(badge_channels);

  for (int i = 0; i < kNumFeatures; ++i) {
    if (cursors[static_cast<std::size_t>(i)].series == nullptr) {
      throw SchemaError(std::string("missing channel '") +
                        std::string(kFeatureNames[static_cast<std::size_t>(i)]) + "'");
    }
  }

  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  for (const auto& c : cursors) {
    t0 = std::max(t0, c.series->start_time);
    t1 = std::min(t1, c.series->end_time());
  }
  if (t1 < t0) {
    std::ostringstream msg;
    msg << "channel time spans do not overlap (latest start " << t0
        << " s > earliest end " << t1 << " s)";
    throw AlignmentError(msg.str());
  }

  const auto ticks =
      static_cast<Eigen::Index>(std::floor((t1 - t0) * target_rate + 1e-9)) + 1;

  std::vector<FeatureVector> out(static_cast<std::size_t>(ticks));
  for (Eigen::Index i = 0; i < ticks; ++i) {
    const double t = t0 + static_cast<double>(i) / target_rate;
    FeatureVector& v = out[static_cast<std::size_t>(i)];
    v.timestamp = t;
    for (int f = 0; f < kNumFeatures; ++f) {
      v.x[f] = cursors[static_cast<std::size_t>(f)].value_nearest(t);
    }
  }
  return out;
}

void validate_segments(const std::vector<TaskSegment>& segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].end > segments[i].start)) {
      throw SchemaError("segment " + std::string(task_name(segments[i].task)) +
                        ": end must exceed start");
    }
    if (i > 0 && segments[i].start < segments[i - 1].end) {
      throw SchemaError("segments must be ordered and non-overlapping");
    }
  }
}

int segment_index_at(const std::vector<TaskSegment>& segments, double t) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const TaskSegment& s = segments[i];
    if (t >= s.start && t < s.end) return static_cast<int>(i);
    if (i + 1 == segments.size() && t == s.end) return static_cast<int>(i);
  }
  return -1;
}

LabeledDataset label_by_segments(const std::vector<FeatureVector>& vectors,
                                 const std::vector<TaskSegment>& segments,
                                 const std::string& participant_id) {
  validate_segments(segments);

  LabeledDataset ds;
  ds.participant_id = participant_id;
  const auto n = static_cast<Eigen::Index>(vectors.size());
  ds.timestamps.resize(n);
  ds.features.resize(n, kNumFeatures);
  ds.labels.reserve(vectors.size());
  ds.feature_names.assign(kFeatureNames.begin(), kFeatureNames.end());

  for (Eigen::Index i = 0; i < n; ++i) {
    const FeatureVector& v = vectors[static_cast<std::size_t>(i)];
    int seg = segment_index_at(segments, v.timestamp);
    if (seg < 0) {
      std::ostringstream msg;
      msg << "timestamp " << v.timestamp << " s falls outside every segment";
      throw LabelingError(msg.str());
    }
    ds.timestamps[i] = v.timestamp;
    ds.features.row(i) = v.x.transpose();
    ds.labels.push_back(segments[static_cast<std::size_t>(seg)].label);
  }
  return ds;
}

}  // namespace stressdet
