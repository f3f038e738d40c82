#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "stressdet/accel.hpp"
#include "stressdet/dataset.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

// One participant's on-disk session directory:
//   phys.csv      timestamp_s,eda,ppg           raw 1000 Hz wristband signals
//                 (or the five precomputed physiological feature channels)
//   accel.csv     timestamp_s,ax_g,ay_g,az_g    raw badge accelerometer
//   audio_front.csv / audio_back.csv  timestamp_s,sample
//   badge.csv     optional: precomputed 31 badge feature channels, replacing
//                 the raw accel/audio trio
//   segments.csv  task,start_s,end_s,label      ground-truth timeline
struct RawSession {
  std::string participant_id;
  std::vector<TimeSeries> phys_channels;  // raw {eda, ppg} or 5 features
  bool phys_precomputed = false;
  std::optional<AccelStream> accel;
  std::optional<TimeSeries> audio_front;
  std::optional<TimeSeries> audio_back;
  std::vector<TimeSeries> badge_channels;  // non-empty when badge.csv was given
  std::vector<TaskSegment> segments;
};

RawSession load_session(const std::filesystem::path& dir);

// uniform-rate channel file with a shared timestamp column
std::vector<TimeSeries> read_channels_csv(const std::filesystem::path& path);
void write_channels_csv(const std::filesystem::path& path,
                        const std::vector<TimeSeries>& channels);

AccelStream read_accel_csv(const std::filesystem::path& path);
void write_accel_csv(const std::filesystem::path& path, const AccelStream& accel);

std::vector<TaskSegment> read_segments_csv(const std::filesystem::path& path);
void write_segments_csv(const std::filesystem::path& path,
                        const std::vector<TaskSegment>& segments);

// fused output: timestamp_s,<36 feature names>,label
LabeledDataset read_dataset_csv(const std::filesystem::path& path,
                                const std::string& participant_id);
void write_dataset_csv(const std::filesystem::path& path, const LabeledDataset& ds);

}  // namespace stressdet
