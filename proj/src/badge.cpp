#include "stressdet/badge.hpp"

namespace stressdet {

namespace {

TimeSeries peaks_channel(const char* name, double start, double rate,
                         const std::vector<SpectralPeaks>& peaks,
                         double SpectralPeaks::* scalar) {
  Eigen::ArrayXd v(static_cast<Eigen::Index>(peaks.size()));
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = peaks[i].*scalar;
  }
  return TimeSeries(name, start, rate, std::move(v));
}

void append_peak_channels(std::vector<TimeSeries>& out, const char* suffix,
                          double start, double rate,
                          const std::vector<SpectralPeaks>& peaks) {
  for (int p = 0; p < 4; ++p) {
    Eigen::ArrayXd hz(static_cast<Eigen::Index>(peaks.size()));
    Eigen::ArrayXd amp(static_cast<Eigen::Index>(peaks.size()));
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      hz[static_cast<Eigen::Index>(i)] = peaks[i].hz[static_cast<std::size_t>(p)];
      amp[static_cast<Eigen::Index>(i)] = peaks[i].amp[static_cast<std::size_t>(p)];
    }
    out.emplace_back("hz" + std::to_string(p) + suffix, start, rate, std::move(hz));
    out.emplace_back("amp" + std::to_string(p) + suffix, start, rate, std::move(amp));
  }
}

}  // namespace

std::vector<TimeSeries> extract_badge(const AccelStream& accel,
                                      const TimeSeries& audio_front,
                                      const TimeSeries& audio_back,
                                      const BadgeParams& params) {
  std::vector<TimeSeries> out = movement_features(accel, params.out_rate);
  {
    std::vector<TimeSeries> posture =
        posture_features(accel, params.out_rate, params.posture);
    // canonical order: pos_act, pos_r, pos_lr, pos_fb
    out.push_back(posture[2]);
    out.push_back(posture[3]);
    out.push_back(posture[0]);
    out.push_back(posture[1]);
  }

  const std::vector<AudioFrame> front =
      make_frames(audio_front, AudioFrame::Mic::kFront, params.vad.frame_duration);
  const std::vector<AudioFrame> back =
      make_frames(audio_back, AudioFrame::Mic::kBack, params.vad.frame_duration);

  std::vector<TimeSeries> speech = speech_activity(front, back, params.vad);
  std::vector<bool> voiced(speech[0].values.size());
  for (Eigen::Index i = 0; i < speech[0].values.size(); ++i) {
    voiced[static_cast<std::size_t>(i)] = speech[0].values[i] > 0.5;
  }
  const double start = speech[0].start_time;
  const double rate = speech[0].rate;
  for (TimeSeries& s : speech) out.push_back(std::move(s));

  const std::vector<SpectralPeaks> front_peaks =
      spectral_series(front, voiced, params.pitch);
  const std::vector<SpectralPeaks> back_peaks =
      spectral_series(back, voiced, params.pitch);
  append_peak_channels(out, "_f", start, rate, front_peaks);
  append_peak_channels(out, "_b", start, rate, back_peaks);
  out.push_back(peaks_channel("pitch_f", start, rate, front_peaks, &SpectralPeaks::pitch));
  out.push_back(peaks_channel("pitch_b", start, rate, back_peaks, &SpectralPeaks::pitch));
  return out;
}

}  // namespace stressdet
