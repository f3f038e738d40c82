#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "stressdet/errors.hpp"
#include "stressdet/features.hpp"

namespace stressdet {

enum class Label { kNeutral, kStress };

// stress -> +1, neutral -> -1
inline int label_sign(Label l) { return l == Label::kStress ? +1 : -1; }
inline Label label_from_sign(int s) { return s > 0 ? Label::kStress : Label::kNeutral; }

inline const char* label_name(Label l) { return l == Label::kStress ? "stress" : "neutral"; }
Label parse_label(const std::string& s);

enum class Task { kNT1, kPP, kPS, kCG, kNT2, kPAD };
const char* task_name(Task t);
Task parse_task(const std::string& s);

// [start, end) span of one TSST task with its ground-truth label. The final
// segment of a session additionally owns its right endpoint so the last
// fused tick is never orphaned.
struct TaskSegment {
  Task task = Task::kNT1;
  double start = 0.0;  // seconds
  double end = 0.0;
  Label label = Label::kNeutral;
};

// Per-participant fused dataset in matrix form: row i of `features` is the
// 36-dim sample at timestamps[i] with labels[i].
struct LabeledDataset {
  std::string participant_id;
  Eigen::VectorXd timestamps;
  Eigen::MatrixXd features;  // n x kNumFeatures (or a modality subset)
  std::vector<Label> labels;
  std::vector<std::string> feature_names;  // column names, size = features.cols()

  Eigen::Index rows() const { return features.rows(); }

  Eigen::Index count(Label l) const {
    Eigen::Index n = 0;
    for (Label x : labels) {
      if (x == l) ++n;
    }
    return n;
  }

  // labels as a +-1 vector (stress = +1)
  Eigen::VectorXi signs() const {
    Eigen::VectorXi y(static_cast<Eigen::Index>(labels.size()));
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      y[i] = label_sign(labels[static_cast<std::size_t>(i)]);
    }
    return y;
  }

  void validate_for_training() const {
    if (rows() == 0) throw TrainingError(participant_id + ": empty dataset");
    if (count(Label::kStress) == 0 || count(Label::kNeutral) == 0) {
      throw TrainingError(participant_id + ": both classes required for training");
    }
  }
};

enum class Modality { kPhys, kBadge, kCombined };
const char* modality_name(Modality m);
Modality parse_modality(const std::string& s);

// Column subset of a full 36-feature dataset for one sensor modality.
LabeledDataset select_modality(const LabeledDataset& full, Modality m);

}  // namespace stressdet
