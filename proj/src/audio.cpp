#include "stressdet/audio.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>

namespace stressdet {

namespace {

constexpr int kMinFrameSamples = 64;

Eigen::ArrayXd frame_volumes(const std::vector<AudioFrame>& frames) {
  Eigen::ArrayXd vol(static_cast<Eigen::Index>(frames.size()));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& s = frames[i].samples;
    vol[static_cast<Eigen::Index>(i)] = s.size() == 0 ? 0.0 : s.abs().mean();
  }
  return vol;
}

// percentile of the trailing window [i - span + 1, i], nearest-rank style
double trailing_percentile(const Eigen::ArrayXd& v, Eigen::Index i, Eigen::Index span,
                           double q) {
  const Eigen::Index lo = std::max<Eigen::Index>(0, i - span + 1);
  const Eigen::Index n = i - lo + 1;
  std::vector<double> w(v.data() + lo, v.data() + lo + n);
  const auto k = static_cast<std::size_t>(q * static_cast<double>(n - 1));
  std::nth_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  return w[k];
}

Eigen::ArrayXd abs_diff_series(const Eigen::ArrayXd& v) {
  Eigen::ArrayXd d = Eigen::ArrayXd::Zero(v.size());
  for (Eigen::Index i = 1; i < v.size(); ++i) d[i] = std::abs(v[i] - v[i - 1]);
  return d;
}

SpectralPeaks analyze_frame(Eigen::FFT<double>& fft, const AudioFrame& frame,
                            bool voiced, const PitchParams& pitch) {
  const Eigen::Index n = frame.samples.size();
  if (n < kMinFrameSamples) {
    throw ConfigError("audio frame too short for spectral analysis (min 64 samples)");
  }

  // Hann-windowed magnitude spectrum, scaled so a full-scale sine reports
  // its own amplitude
  std::vector<double> windowed(static_cast<std::size_t>(n));
  double window_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w =
        0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                              static_cast<double>(n - 1)));
    windowed[static_cast<std::size_t>(i)] = frame.samples[i] * w;
    window_sum += w;
  }
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, windowed);

  const Eigen::Index half = n / 2;
  std::vector<std::pair<double, Eigen::Index>> peaks;  // (magnitude, bin)
  for (Eigen::Index k = 1; k < half; ++k) {
    const double m = std::abs(spectrum[static_cast<std::size_t>(k)]);
    const double prev = std::abs(spectrum[static_cast<std::size_t>(k - 1)]);
    const double next = std::abs(spectrum[static_cast<std::size_t>(k + 1)]);
    if (m > prev && m >= next) peaks.emplace_back(m, k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  SpectralPeaks out;
  const double bin_hz = frame.rate / static_cast<double>(n);
  const double amp_scale = window_sum > 0.0 ? 2.0 / window_sum : 0.0;
  for (std::size_t p = 0; p < std::min<std::size_t>(4, peaks.size()); ++p) {
    out.hz[p] = static_cast<double>(peaks[p].second) * bin_hz;
    out.amp[p] = peaks[p].first * amp_scale;
  }

  if (voiced) {
    // autocorrelation pitch on the mean-removed frame
    const Eigen::ArrayXd x = frame.samples - frame.samples.mean();
    const auto lag_min =
        static_cast<Eigen::Index>(std::ceil(frame.rate / pitch.max_hz - 1e-9));
    auto lag_max = static_cast<Eigen::Index>(std::floor(frame.rate / pitch.min_hz + 1e-9));
    lag_max = std::min(lag_max, n - 1);
    double best = 0.0;
    Eigen::Index best_lag = 0;
    for (Eigen::Index lag = std::max<Eigen::Index>(1, lag_min); lag <= lag_max; ++lag) {
      const double r = (x.head(n - lag) * x.tail(n - lag)).sum();
      if (r > best) {
        best = r;
        best_lag = lag;
      }
    }
    if (best_lag > 0) out.pitch = frame.rate / static_cast<double>(best_lag);
  }
  return out;
}

}  // namespace

std::vector<AudioFrame> make_frames(const TimeSeries& samples, AudioFrame::Mic mic,
                                    double frame_duration) {
  samples.validate();
  if (frame_duration <= 0.0) throw ConfigError("frame duration must be > 0");
  const auto frame_len =
      static_cast<Eigen::Index>(std::round(samples.rate * frame_duration));
  if (frame_len < 1) throw ConfigError("frame duration shorter than one sample");

  std::vector<AudioFrame> frames;
  const Eigen::Index count = samples.size() / frame_len;
  frames.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) {
    AudioFrame f;
    f.mic = mic;
    f.rate = samples.rate;
    f.frame_start = samples.start_time + static_cast<double>(i) * frame_duration;
    f.samples = samples.values.segment(i * frame_len, frame_len);
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<TimeSeries> speech_activity(const std::vector<AudioFrame>& front,
                                        const std::vector<AudioFrame>& back,
                                        const VadParams& params) {
  if (front.size() != back.size()) {
    throw AlignmentError("front/back mic frame counts differ");
  }
  for (std::size_t i = 0; i < front.size(); ++i) {
    if (std::abs(front[i].frame_start - back[i].frame_start) > 1e-6) {
      throw AlignmentError("front/back mic frame grids are not aligned");
    }
  }

  const double rate = 1.0 / params.frame_duration;
  const double start = front.empty() ? 0.0 : front.front().frame_start;
  const auto n = static_cast<Eigen::Index>(front.size());

  const Eigen::ArrayXd vol_f = frame_volumes(front);
  const Eigen::ArrayXd vol_b = frame_volumes(back);

  const auto span = std::max<Eigen::Index>(
      1, static_cast<Eigen::Index>(std::round(params.noise_window * rate)));
  Eigen::ArrayXd voiced(n), unvoiced(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double floor = trailing_percentile(vol_f, i, span, params.noise_percentile);
    const bool speaking = vol_f[i] > params.threshold_factor * floor;
    voiced[i] = speaking ? 1.0 : 0.0;
    unvoiced[i] = 1.0 - voiced[i];
  }

  std::vector<TimeSeries> out;
  out.emplace_back("voiced", start, rate, voiced);
  out.emplace_back("unvoiced", start, rate, unvoiced);
  out.emplace_back("vol_f", start, rate, vol_f);
  out.emplace_back("vol_b", start, rate, vol_b);
  out.emplace_back("volc_f", start, rate, abs_diff_series(vol_f));
  out.emplace_back("volc_b", start, rate, abs_diff_series(vol_b));
  return out;
}

SpectralPeaks spectral_features(const AudioFrame& frame, bool voiced,
                                const PitchParams& pitch) {
  Eigen::FFT<double> fft;
  return analyze_frame(fft, frame, voiced, pitch);
}

std::vector<SpectralPeaks> spectral_series(const std::vector<AudioFrame>& frames,
                                           const std::vector<bool>& voiced,
                                           const PitchParams& pitch) {
  if (frames.size() != voiced.size()) {
    throw AlignmentError("voiced flags must match the frame count");
  }
  Eigen::FFT<double> fft;
  std::vector<SpectralPeaks> out;
  out.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    out.push_back(analyze_frame(fft, frames[i], voiced[i], pitch));
  }
  return out;
}

}  // namespace stressdet
