#include "ecfs/baselines.hpp"

#include "ecfs/centrality.hpp"
#include "ecfs/graph.hpp"
#include "ecfs/normalize.hpp"

namespace ecfs {

FeatureRanking rank_by_fisher(const Dataset& d) {
  return rank_features(fisher_scores(normalize_features(d).data));
}

FeatureRanking rank_by_mi(const Dataset& d, int bins) {
  if (bins <= 0) bins = default_bins(d.samples());
  return rank_features(mutual_information_scores(normalize_features(d).data, bins));
}

}  // namespace ecfs
