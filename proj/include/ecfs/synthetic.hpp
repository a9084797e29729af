#pragma once

#include <cstdint>
#include <vector>

#include "ecfs/dataset.hpp"

namespace ecfs {

/// Two-class Gaussian data with a hidden set of informative columns.
struct SyntheticSpec {
  std::size_t n_samples = 200;
  std::size_t n_features = 500;
  std::size_t n_informative = 20;
  double class_separation = 2.0;
  double noise_sd = 1.0;
  std::uint64_t seed = 0;
};

struct SyntheticData {
  Dataset data;
  std::vector<std::size_t> informative;  // ascending
};

/// Samples alternate between class 0 and class 1. Informative columns are
/// N(0, noise_sd) for class 0 and N(class_separation, noise_sd) for class 1;
/// the rest are N(0, noise_sd) regardless of class.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace ecfs
