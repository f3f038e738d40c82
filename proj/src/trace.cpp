#include "stressdet/trace.hpp"

namespace stressdet {

PredictionTrace prediction_trace(const std::vector<Label>& predictions,
                                 const std::vector<Label>& truth,
                                 const std::vector<double>& timestamps,
                                 const std::vector<std::string>& tasks) {
  const std::size_t n = predictions.size();
  if (truth.size() != n || timestamps.size() != n || tasks.size() != n) {
    throw SchemaError("prediction trace: input length mismatch");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (timestamps[i] <= timestamps[i - 1]) {
      throw SchemaError("prediction trace: session must be ordered by timestamp");
    }
  }

  PredictionTrace out;
  out.points.reserve(n);
  const double dt = n > 1 ? timestamps[1] - timestamps[0] : 0.0;

  int run_ticks = 0;
  double run_start = 0.0;
  auto close_run = [&]() {
    if (run_ticks == 0) return;
    FalseAlarmRun run;
    run.start = run_start;
    run.ticks = run_ticks;
    run.duration = run_ticks * dt;
    out.total_false_alarm_seconds += run.duration;
    out.false_alarms.push_back(run);
    run_ticks = 0;
  };

  for (std::size_t i = 0; i < n; ++i) {
    TracePoint p;
    p.t = timestamps[i];
    p.truth = label_sign(truth[i]);
    p.predicted = label_sign(predictions[i]);
    p.task = tasks[i];
    out.points.push_back(std::move(p));

    if (predictions[i] != truth[i]) {
      if (run_ticks == 0) run_start = timestamps[i];
      ++run_ticks;
    } else {
      close_run();
    }
  }
  close_run();
  return out;
}

}  // namespace stressdet
