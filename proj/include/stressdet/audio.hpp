#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "stressdet/time_series.hpp"

namespace stressdet {

// One fixed-duration microphone frame aligned to the feature grid.
struct AudioFrame {
  enum class Mic { kFront, kBack };
  Mic mic = Mic::kFront;
  double frame_start = 0.0;  // seconds
  double rate = 0.0;         // Hz
  Eigen::ArrayXd samples;
};

struct VadParams {
  double frame_duration = 0.1;  // seconds, aligns frames with the 10 Hz grid
  double threshold_factor = 3.0;
  double noise_window = 5.0;       // seconds of trailing volume history
  double noise_percentile = 0.10;  // floor estimate inside that history
};

struct PitchParams {
  double min_hz = 50.0;
  double max_hz = 400.0;
};

// chop a uniform sample stream into consecutive non-overlapping frames
std::vector<AudioFrame> make_frames(const TimeSeries& samples, AudioFrame::Mic mic,
                                    double frame_duration = 0.1);

// Speech-activity channels from the paired mic frame streams:
// vol_* = mean |sample| per frame; voiced = front volume above an adaptive
// noise floor (trailing-percentile estimate times threshold_factor);
// unvoiced = 1 - voiced; volc_* = |dvol| between consecutive frames.
// Returns {voiced, unvoiced, vol_f, vol_b, volc_f, volc_b}.
std::vector<TimeSeries> speech_activity(const std::vector<AudioFrame>& front,
                                        const std::vector<AudioFrame>& back,
                                        const VadParams& params = {});

struct SpectralPeaks {
  std::array<double, 4> hz = {0, 0, 0, 0};
  std::array<double, 4> amp = {0, 0, 0, 0};
  double pitch = 0.0;  // Hz, 0 when unvoiced or aperiodic
};

// Top-4 spectral peaks of the Hann-windowed frame (descending amplitude,
// zero-padded) plus autocorrelation pitch restricted to
// [pitch.min_hz, pitch.max_hz]. Pitch is reported 0 for unvoiced frames.
// Frames shorter than 64 samples are rejected.
SpectralPeaks spectral_features(const AudioFrame& frame, bool voiced = true,
                                const PitchParams& pitch = {});

// Batch version reusing one FFT plan; voiced[i] gates pitch for frame i.
std::vector<SpectralPeaks> spectral_series(const std::vector<AudioFrame>& frames,
                                           const std::vector<bool>& voiced,
                                           const PitchParams& pitch = {});

}  // namespace stressdet
