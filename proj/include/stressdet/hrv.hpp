#pragma once

#include "stressdet/beats.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

// SDNN series: at each tick, the population standard deviation (seconds) of
// the normal-to-normal intervals whose ending beat lies in the trailing
// window. Ticks with fewer than two intervals repeat the last valid value,
// 0 before any. Span defaults to [first beat, last beat].
TimeSeries compute_hrv(const BeatSequence& beats, double window, double out_rate,
                       double span_start, double span_end);

TimeSeries compute_hrv(const BeatSequence& beats, double window = 30.0,
                       double out_rate = 10.0);

}  // namespace stressdet
