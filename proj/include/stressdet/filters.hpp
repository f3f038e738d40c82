#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "stressdet/time_series.hpp"

namespace stressdet {

// IIR filter request. `cutoff` is the low-pass corner, or the high corner of
// a band-pass whose low corner is `low_cut`.
struct FilterSpec {
  enum class Kind { kLowPass, kBandPass };
  Kind kind = Kind::kLowPass;
  double low_cut = 0.0;  // Hz, band-pass only
  double cutoff = 0.0;   // Hz
  int order = 2;
  bool zero_phase = true;
};

inline FilterSpec eda_low_pass_spec() {
  return {FilterSpec::Kind::kLowPass, 0.0, 0.5, 2, true};
}

inline FilterSpec ppg_band_pass_spec() {
  return {FilterSpec::Kind::kBandPass, 0.5, 35.0, 2, true};
}

// one second-order section, direct form II transposed
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

// Butterworth realization of the spec at the given sampling rate. A band-pass
// becomes a high-pass/low-pass cascade of the stated order each.
// Throws ConfigError when a corner reaches Nyquist.
std::vector<Biquad> design_filter(const FilterSpec& spec, double rate);

// Single forward pass through the cascade, state initialized for a step of
// x[0] to suppress the start-up transient.
Eigen::ArrayXd filter_forward(const std::vector<Biquad>& sections,
                              const Eigen::ArrayXd& x);

// Forward-backward pass (zero phase, magnitude response squared) with
// odd-reflection edge padding.
Eigen::ArrayXd filter_forward_backward(const std::vector<Biquad>& sections,
                                       const Eigen::ArrayXd& x);

Eigen::ArrayXd apply_filter(const FilterSpec& spec, double rate,
                            const Eigen::ArrayXd& x);

// Complex response of the cascade at frequency f; the zero-phase magnitude is
// |H|^2. This is the analytic reference the tests check time-domain output
// against.
std::complex<double> cascade_response(const std::vector<Biquad>& sections,
                                      double freq_hz, double rate);

double effective_magnitude(const FilterSpec& spec, double rate, double freq_hz);

// 0.5 Hz low-pass of the raw electrodermal channel; same rate and length.
TimeSeries low_pass_eda(const TimeSeries& raw,
                        const FilterSpec& spec = eda_low_pass_spec());

// 0.5-35 Hz band-pass of the raw pulse channel; same rate and length.
TimeSeries band_pass_ppg(const TimeSeries& raw,
                         const FilterSpec& spec = ppg_band_pass_spec());

}  // namespace stressdet
