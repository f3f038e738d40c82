#pragma once

#include <string>
#include <vector>

#include "stressdet/dataset.hpp"

namespace stressdet {

struct TracePoint {
  double t = 0.0;
  int truth = 0;      // +-1
  int predicted = 0;  // +-1
  std::string task;
};

// maximal contiguous run of wrong predictions
struct FalseAlarmRun {
  double start = 0.0;
  double duration = 0.0;  // seconds, run length times the tick period
  int ticks = 0;
};

struct PredictionTrace {
  std::vector<TracePoint> points;
  std::vector<FalseAlarmRun> false_alarms;
  double total_false_alarm_seconds = 0.0;
};

// Plot-ready per-timestep table of truth vs prediction over one ordered
// session, plus the wrong-prediction runs with their durations.
PredictionTrace prediction_trace(const std::vector<Label>& predictions,
                                 const std::vector<Label>& truth,
                                 const std::vector<double>& timestamps,
                                 const std::vector<std::string>& tasks);

}  // namespace stressdet
