#include "stressdet/metrics.hpp"

#include <cmath>

namespace stressdet {

Metrics metrics_from_confusion(const ConfusionMatrix& cm) {
  Metrics m;
  const long total = cm.total();
  if (total == 0) throw SchemaError("metrics need at least one example");
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
  if (cm.tp + cm.fp > 0) {
    m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
  }
  if (cm.tp + cm.fn > 0) {
    m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  }
  return m;
}

Evaluation evaluate(const std::vector<Label>& predictions,
                    const std::vector<Label>& truth) {
  if (predictions.size() != truth.size()) {
    throw SchemaError("evaluate: prediction/truth length mismatch");
  }
  if (predictions.empty()) throw SchemaError("evaluate: empty input");

  Evaluation ev;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool pos = truth[i] == Label::kStress;
    const bool pred_pos = predictions[i] == Label::kStress;
    if (pos && pred_pos) ++ev.confusion.tp;
    if (pos && !pred_pos) ++ev.confusion.fn;
    if (!pos && pred_pos) ++ev.confusion.fp;
    if (!pos && !pred_pos) ++ev.confusion.tn;
  }
  ev.metrics = metrics_from_confusion(ev.confusion);
  return ev;
}

MeanStd aggregate_cohort(const std::vector<double>& values) {
  if (values.empty()) throw SchemaError("cohort aggregate needs at least one value");
  MeanStd out;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

ConfusionPercentages confusion_percentages(const ConfusionMatrix& cm) {
  ConfusionPercentages out;
  const long stress_total = cm.tp + cm.fn;
  const long neutral_total = cm.fp + cm.tn;
  if (stress_total > 0) {
    out.stress_row = {100.0 * static_cast<double>(cm.tp) / static_cast<double>(stress_total),
                      100.0 * static_cast<double>(cm.fn) / static_cast<double>(stress_total)};
  }
  if (neutral_total > 0) {
    out.neutral_row = {100.0 * static_cast<double>(cm.fp) / static_cast<double>(neutral_total),
                       100.0 * static_cast<double>(cm.tn) / static_cast<double>(neutral_total)};
  }
  return out;
}

}  // namespace stressdet
