#include "stressdet/physio.hpp"

#include "stressdet/beats.hpp"
#include "stressdet/hrv.hpp"
#include "stressdet/resample.hpp"

namespace stressdet {

std::vector<TimeSeries> extract_physio(const TimeSeries& raw_eda,
                                       const TimeSeries& raw_ppg,
                                       const PhysioParams& params) {
  raw_eda.validate();
  raw_ppg.validate();
  if (raw_eda.empty() || raw_ppg.empty()) {
    throw SchemaError("physiological extraction needs non-empty eda and ppg");
  }

  std::vector<TimeSeries> out;
  out.reserve(5);

  TimeSeries eda = downsample(raw_eda, params.out_rate);
  eda.channel_name = "eda";
  out.push_back(std::move(eda));

  TimeSeries eda_f = downsample(low_pass_eda(raw_eda, params.eda_filter), params.out_rate);
  eda_f.channel_name = "eda_f";
  out.push_back(std::move(eda_f));

  TimeSeries ppg = downsample(raw_ppg, params.out_rate);
  ppg.channel_name = "ppg";
  out.push_back(std::move(ppg));

  const TimeSeries filtered = band_pass_ppg(raw_ppg, params.ppg_filter);
  const BeatSequence beats = detect_beats(filtered, params.refractory);
  const double span_start = raw_ppg.start_time;
  const double span_end = raw_ppg.end_time();

  out.push_back(ppg_template_similarity(filtered, beats, params.out_rate, span_start,
                                        span_end, params.template_beats,
                                        params.template_points));
  out.push_back(compute_hrv(beats, params.hrv_window, params.out_rate, span_start,
                            span_end));
  return out;
}

}  // namespace stressdet
