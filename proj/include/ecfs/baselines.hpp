#pragma once

#include "ecfs/dataset.hpp"

namespace ecfs {

/// Fisher scores on the sum-to-one normalized data, descending.
FeatureRanking rank_by_fisher(const Dataset& d);

/// Histogram mutual information on the normalized data, descending.
/// bins <= 0 selects default_bins(T).
FeatureRanking rank_by_mi(const Dataset& d, int bins = 0);

}  // namespace ecfs
