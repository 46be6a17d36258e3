#pragma once

#include "nss/types.hpp"

namespace nss {

// Train/test folds for the three test scenarios. IntraSession shuffles each
// session's segments with the seed and takes ceil(ratio*n) for training;
// InterSession holds out one session per multi-session subject per fold;
// InterSubject is leave-one-subject-out.
SplitSpec make_splits(const DatasetManifest& manifest, Scenario scenario, double ratio,
                      uint64_t seed);

// One Heard segment per (StimulusOnset, StimulusEnd) pair and one Imagined
// segment per (ImagineStart, ImagineEnd) pair, in marker order.
std::vector<Segment> extract_segments(const Recording& recording);

// EGI recording reduced to the four Muse-equivalent channels, re-referenced
// against Fpz.
Recording derive_egi_reduced(const Recording& egi);

}  // namespace nss
