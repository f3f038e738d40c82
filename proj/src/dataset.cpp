#include "stressdet/dataset.hpp"

namespace stressdet {

Label parse_label(const std::string& s) {
  if (s == "stress") return Label::kStress;
  if (s == "neutral") return Label::kNeutral;
  throw SchemaError("unknown label '" + s + "' (expected stress|neutral)");
}

const char* task_name(Task t) {
  switch (t) {
    case Task::kNT1: return "NT1";
    case Task::kPP: return "PP";
    case Task::kPS: return "PS";
    case Task::kCG: return "CG";
    case Task::kNT2: return "NT2";
    case Task::kPAD: return "PAD";
  }
  return "?";
}

Task parse_task(const std::string& s) {
  if (s == "NT1") return Task::kNT1;
  if (s == "PP") return Task::kPP;
  if (s == "PS") return Task::kPS;
  if (s == "CG") return Task::kCG;
  if (s == "NT2") return Task::kNT2;
  if (s == "PAD") return Task::kPAD;
  throw SchemaError("unknown task '" + s + "'");
}

const char* modality_name(Modality m) {
  switch (m) {
    case Modality::kPhys: return "phys";
    case Modality::kBadge: return "badge";
    case Modality::kCombined: return "combined";
  }
  return "?";
}

Modality parse_modality(const std::string& s) {
  if (s == "phys") return Modality::kPhys;
  if (s == "badge") return Modality::kBadge;
  if (s == "combined") return Modality::kCombined;
  throw ConfigError("unknown modality '" + s + "' (expected phys|badge|combined)");
}

LabeledDataset select_modality(const LabeledDataset& full, Modality m) {
  if (full.features.cols() != kNumFeatures) {
    throw SchemaError("modality selection requires the full 36-feature dataset");
  }
  int c0 = 0;
  int nc = kNumFeatures;
  switch (m) {
    case Modality::kPhys:
      c0 = 0;
      nc = kNumPhysFeatures;
      break;
    case Modality::kBadge:
      c0 = kNumPhysFeatures;
      nc = kNumBadgeFeatures;
      break;
    case Modality::kCombined:
      return full;
  }
  LabeledDataset out;
  out.participant_id = full.participant_id;
  out.timestamps = full.timestamps;
  out.features = full.features.middleCols(c0, nc);
  out.labels = full.labels;
  out.feature_names.assign(full.feature_names.begin() + c0,
                           full.feature_names.begin() + c0 + nc);
  return out;
}

}  // namespace stressdet
