#include "stressdet/filters.hpp"

#include <cmath>

namespace stressdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_corner(double f, double rate, const char* what) {
  if (f <= 0.0) throw ConfigError(std::string(what) + " must be > 0");
  if (f >= rate / 2.0) {
    throw ConfigError(std::string(what) + " must stay below the Nyquist rate");
  }
}

Biquad biquad_low_pass(double fc, double rate, double q) {
  const double k = std::tan(kPi * fc / rate);
  const double norm = 1.0 / (1.0 + k / q + k * k);
  Biquad s;
  s.b0 = k * k * norm;
  s.b1 = 2.0 * s.b0;
  s.b2 = s.b0;
  s.a1 = 2.0 * (k * k - 1.0) * norm;
  s.a2 = (1.0 - k / q + k * k) * norm;
  return s;
}

Biquad biquad_high_pass(double fc, double rate, double q) {
  const double k = std::tan(kPi * fc / rate);
  const double norm = 1.0 / (1.0 + k / q + k * k);
  Biquad s;
  s.b0 = norm;
  s.b1 = -2.0 * norm;
  s.b2 = norm;
  s.a1 = 2.0 * (k * k - 1.0) * norm;
  s.a2 = (1.0 - k / q + k * k) * norm;
  return s;
}

// first-order section expressed as a degenerate biquad
Biquad first_order(double fc, double rate, bool high_pass) {
  const double k = std::tan(kPi * fc / rate);
  Biquad s;
  if (high_pass) {
    s.b0 = 1.0 / (k + 1.0);
    s.b1 = -s.b0;
  } else {
    s.b0 = k / (k + 1.0);
    s.b1 = s.b0;
  }
  s.b2 = 0.0;
  s.a1 = (k - 1.0) / (k + 1.0);
  s.a2 = 0.0;
  return s;
}

// Butterworth pole-pair quality factors for the given order
std::vector<double> butterworth_qs(int order) {
  std::vector<double> qs;
  const int pairs = order / 2;
  for (int k = 0; k < pairs; ++k) {
    double theta = (order % 2 == 0)
                       ? kPi * (2.0 * k + 1.0) / (2.0 * order)
                       : kPi * (k + 1.0) / order;
    qs.push_back(1.0 / (2.0 * std::cos(theta)));
  }
  return qs;
}

void append_butterworth(std::vector<Biquad>& out, double fc, double rate,
                        int order, bool high_pass) {
  for (double q : butterworth_qs(order)) {
    out.push_back(high_pass ? biquad_high_pass(fc, rate, q)
                            : biquad_low_pass(fc, rate, q));
  }
  if (order % 2 == 1) out.push_back(first_order(fc, rate, high_pass));
}

// steady-state section state for a unit step input (direct form II transposed)
struct SectionState {
  double z1 = 0.0, z2 = 0.0;
};

SectionState step_state(const Biquad& s) {
  const double gain = (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
  SectionState st;
  st.z2 = s.b2 - s.a2 * gain;
  st.z1 = s.b1 - s.a1 * gain + st.z2;
  return st;
}

Eigen::ArrayXd run_cascade(const std::vector<Biquad>& sections,
                           const Eigen::ArrayXd& x) {
  Eigen::ArrayXd y = x;
  for (const Biquad& s : sections) {
    SectionState ss = step_state(s);
    double z1 = ss.z1 * y[0];
    double z2 = ss.z2 * y[0];
    for (Eigen::Index n = 0; n < y.size(); ++n) {
      const double in = y[n];
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      y[n] = out;
    }
  }
  return y;
}

}  // namespace

std::vector<Biquad> design_filter(const FilterSpec& spec, double rate) {
  if (rate <= 0.0) throw ConfigError("sampling rate must be > 0");
  if (spec.order < 1) throw ConfigError("filter order must be >= 1");
  std::vector<Biquad> sections;
  switch (spec.kind) {
    case FilterSpec::Kind::kLowPass:
      check_corner(spec.cutoff, rate, "low-pass cutoff");
      append_butterworth(sections, spec.cutoff, rate, spec.order, false);
      break;
    case FilterSpec::Kind::kBandPass:
      check_corner(spec.low_cut, rate, "band-pass low corner");
      check_corner(spec.cutoff, rate, "band-pass high corner");
      if (spec.low_cut >= spec.cutoff) {
        throw ConfigError("band-pass low corner must stay below the high corner");
      }
      append_butterworth(sections, spec.low_cut, rate, spec.order, true);
      append_butterworth(sections, spec.cutoff, rate, spec.order, false);
      break;
  }
  return sections;
}

Eigen::ArrayXd filter_forward(const std::vector<Biquad>& sections,
                              const Eigen::ArrayXd& x) {
  if (x.size() == 0) return x;
  return run_cascade(sections, x);
}

Eigen::ArrayXd filter_forward_backward(const std::vector<Biquad>& sections,
                                       const Eigen::ArrayXd& x) {
  const Eigen::Index n = x.size();
  if (n == 0) return x;

  const Eigen::Index pad = std::min<Eigen::Index>(n - 1, 9);
  Eigen::ArrayXd ext(n + 2 * pad);
  // odd reflection about both endpoints
  for (Eigen::Index i = 0; i < pad; ++i) {
    ext[i] = 2.0 * x[0] - x[pad - i];
    ext[n + pad + i] = 2.0 * x[n - 1] - x[n - 2 - i];
  }
  ext.segment(pad, n) = x;

  Eigen::ArrayXd y = run_cascade(sections, ext);
  y.reverseInPlace();
  y = run_cascade(sections, y);
  y.reverseInPlace();
  return y.segment(pad, n);
}

Eigen::ArrayXd apply_filter(const FilterSpec& spec, double rate,
                            const Eigen::ArrayXd& x) {
  const std::vector<Biquad> sections = design_filter(spec, rate);
  return spec.zero_phase ? filter_forward_backward(sections, x)
                         : filter_forward(sections, x);
}

std::complex<double> cascade_response(const std::vector<Biquad>& sections,
                                      double freq_hz, double rate) {
  const std::complex<double> z1 =
      std::exp(std::complex<double>(0.0, -2.0 * kPi * freq_hz / rate));
  const std::complex<double> z2 = z1 * z1;
  std::complex<double> h(1.0, 0.0);
  for (const Biquad& s : sections) {
    h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  }
  return h;
}

double effective_magnitude(const FilterSpec& spec, double rate, double freq_hz) {
  const double m = std::abs(cascade_response(design_filter(spec, rate), freq_hz, rate));
  return spec.zero_phase ? m * m : m;
}

TimeSeries low_pass_eda(const TimeSeries& raw, const FilterSpec& spec) {
  raw.validate();
  if (spec.kind != FilterSpec::Kind::kLowPass) {
    throw ConfigError("eda filter must be a low-pass");
  }
  TimeSeries out = raw;
  out.channel_name = "eda_f";
  out.values = apply_filter(spec, raw.rate, raw.values);
  return out;
}

TimeSeries band_pass_ppg(const TimeSeries& raw, const FilterSpec& spec) {
  raw.validate();
  if (spec.kind != FilterSpec::Kind::kBandPass) {
    throw ConfigError("ppg filter must be a band-pass");
  }
  TimeSeries out = raw;
  out.channel_name = "ppg_filt";
  out.values = apply_filter(spec, raw.rate, raw.values);
  return out;
}

}  // namespace stressdet
