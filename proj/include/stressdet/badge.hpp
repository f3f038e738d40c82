#pragma once

#include <vector>

#include "stressdet/accel.hpp"
#include "stressdet/audio.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

struct BadgeParams {
  double out_rate = 10.0;
  VadParams vad;
  PitchParams pitch;
  PostureParams posture;
};

// All 31 sociometric channels from the raw accelerometer stream and the two
// microphone streams. Channel names follow the canonical feature table.
std::vector<TimeSeries> extract_badge(const AccelStream& accel,
                                      const TimeSeries& audio_front,
                                      const TimeSeries& audio_back,
                                      const BadgeParams& params = {});

}  // namespace stressdet
