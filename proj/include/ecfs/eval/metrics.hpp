#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ecfs/dataset.hpp"

namespace ecfs::eval {

/// Rank-based ROC AUC: the probability that a random positive (label 1)
/// scores above a random negative, counting ties as one half.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

/// Kuncheva consistency of two equal-size subsets of {0, ..., N-1}:
/// (r N - k^2) / (k (N - k)) with r the overlap and k the subset size.
double kuncheva_index(std::span<const std::size_t> a, std::span<const std::size_t> b, std::size_t n);

struct StabilityPoint {
  std::size_t cardinality = 0;
  double kuncheva = 0.0;
};

/// Mean pairwise Kuncheva index of the top-k sets, for each k.
std::vector<StabilityPoint> stability_curve(std::span<const FeatureRanking> rankings,
                                            std::span<const std::size_t> cardinalities);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};

/// Two-sided Student t-test with pooled variance (equal, unknown variances).
/// Zero pooled variance yields p = 1 for equal means and p = 0 otherwise.
TTestResult two_sample_ttest(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> v);
/// Sample standard deviation; 0 for fewer than two values.
double sample_sd(std::span<const double> v);

}  // namespace ecfs::eval
