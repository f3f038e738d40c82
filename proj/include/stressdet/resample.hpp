#pragma once

#include "stressdet/time_series.hpp"

namespace stressdet {

// Rate reduction by block averaging: output sample i is the mean of input
// block [i*m, (i+1)*m) where m = series.rate / out_rate must be an integer.
// Averaging doubles as the anti-alias stage for the raw channels.
// Throws ConfigError on a non-integer ratio.
TimeSeries downsample(const TimeSeries& series, double out_rate);

}  // namespace stressdet
