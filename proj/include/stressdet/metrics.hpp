#pragma once

#include <optional>
#include <vector>

#include "stressdet/dataset.hpp"

namespace stressdet {

// Binary confusion counts with stress as the positive class.
struct ConfusionMatrix {
  long tp = 0, tn = 0, fp = 0, fn = 0;

  long total() const { return tp + tn + fp + fn; }
};

// precision/recall stay empty when their denominator is zero; they are never
// silently reported as 0 or 1
struct Metrics {
  double accuracy = 0.0;
  std::optional<double> precision;
  std::optional<double> recall;
};

struct Evaluation {
  ConfusionMatrix confusion;
  Metrics metrics;
};

Metrics metrics_from_confusion(const ConfusionMatrix& cm);

// accuracy = (TP+TN)/total, precision = TP/(TP+FP), recall = TP/(TP+FN)
Evaluation evaluate(const std::vector<Label>& predictions,
                    const std::vector<Label>& truth);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

// cohort aggregate over per-participant values
MeanStd aggregate_cohort(const std::vector<double>& values);

// Row-normalized percentages: row 0 = (TP, FN) over the stress row total,
// row 1 = (FP, TN) over the neutral row total; a row with no examples stays
// empty.
struct ConfusionPercentages {
  std::optional<std::array<double, 2>> stress_row;
  std::optional<std::array<double, 2>> neutral_row;
};

ConfusionPercentages confusion_percentages(const ConfusionMatrix& cm);

}  // namespace stressdet
