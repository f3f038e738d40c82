#pragma once

#include <vector>

#include "stressdet/dataset.hpp"
#include "stressdet/features.hpp"
#include "stressdet/time_series.hpp"

namespace stressdet {

// Closest-timestamp fusion of the physiological and badge channel sets onto
// one tick grid at target_rate. The grid starts at the latest channel start
// and ends at the earliest channel end; each output cell takes the sample of
// its channel nearest in time to the tick (the earlier sample wins ties).
// Output length = floor(overlap * target_rate) + 1.
//
// Throws SchemaError when a feature channel is missing or empty and
// AlignmentError when the channels share no time span.
std::vector<FeatureVector> synchronize(const std::vector<TimeSeries>& phys_channels,
                                       const std::vector<TimeSeries>& badge_channels,
                                       double target_rate = 10.0);

// Attaches the segment label to every fused sample. A timestamp must fall in
// exactly one [start, end) segment; the final segment also owns its right
// endpoint. Throws LabelingError naming the first orphan timestamp.
LabeledDataset label_by_segments(const std::vector<FeatureVector>& vectors,
                                 const std::vector<TaskSegment>& segments,
                                 const std::string& participant_id = "");

// index of the segment containing t, or -1
int segment_index_at(const std::vector<TaskSegment>& segments, double t);

void validate_segments(const std::vector<TaskSegment>& segments);

}  // namespace stressdet
