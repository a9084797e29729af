#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ecfs/dataset.hpp"

namespace ecfs::eval {

struct SplitPlan {
  double train_fraction = 2.0 / 3.0;
  int n_repeats = 100;
  std::uint64_t seed = 0;
  bool stratified = true;
};

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// SplitMix64 finalizer over (master, stream); the per-repeat seed scheme.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Partition for one repeat, seeded by derive_seed(plan.seed, repeat).
/// Stratified plans keep round(train_fraction * n_c) samples of class c in
/// train, clamped so that both sides hold at least one.
SplitIndices repeat_split(const Dataset& d, const SplitPlan& plan, int repeat);

std::vector<SplitIndices> make_split_indices(const Dataset& d, const SplitPlan& plan);
std::vector<std::pair<Dataset, Dataset>> make_splits(const Dataset& d, const SplitPlan& plan);

/// Stratified k-fold partition; entry i holds fold i as `test`.
/// Throws if some class has fewer samples than folds, since a validation
/// fold would then miss that class.
std::vector<SplitIndices> stratified_folds(const Dataset& d, int folds, std::uint64_t seed);

}  // namespace ecfs::eval
