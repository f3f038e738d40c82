#pragma once

#include <vector>

#include "stressdet/filters.hpp"
#include "stressdet/ppg_template.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

struct PhysioParams {
  FilterSpec eda_filter = eda_low_pass_spec();
  FilterSpec ppg_filter = ppg_band_pass_spec();
  double hrv_window = 30.0;   // seconds
  double refractory = 0.3;    // seconds between beats
  int template_beats = kTemplateBeats;
  int template_points = kTemplatePoints;
  double out_rate = 10.0;
};

// Full physiological channel set (eda, eda_f, ppg, ppg_t, hrv) at
// params.out_rate. Filtering and beat analysis run at the native input rate;
// every emitted channel is then reduced to the output grid.
std::vector<TimeSeries> extract_physio(const TimeSeries& raw_eda,
                                       const TimeSeries& raw_ppg,
                                       const PhysioParams& params = {});

}  // namespace stressdet
