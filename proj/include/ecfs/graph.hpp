#pragma once

#include <cstddef>
#include <vector>

#include "ecfs/dataset.hpp"
#include "ecfs/matrix.hpp"

namespace ecfs {

enum class ScoreKind { fisher, mutual_information, centrality };

/// One score per feature.
struct ScoreVector {
  Vector values;
  ScoreKind kind = ScoreKind::fisher;

  std::size_t size() const noexcept { return values.size(); }
};

/// Weighted feature graph; entries are nonnegative and finite.
struct AdjacencyMatrix {
  Matrix a;
  double alpha = 0.0;
  bool fisher_constant = false;  // f rescaled to all zeros
  bool mi_constant = false;      // m rescaled to all zeros
};

/// Stand-in for a zero within-class variance.
inline constexpr double kFisherEpsilon = 1e-12;

/// Two classes: (mu_1 - mu_2)^2 / (var_1 + var_2).
/// More classes: sum_c (mu_c - mu)^2 / sum_c var_c, with mu the overall mean.
/// Population variances throughout.
ScoreVector fisher_scores(const Dataset& d);

/// max(2, floor(sqrt(T))).
int default_bins(std::size_t samples);

/// Mutual information (nats) between each feature, discretized into `bins`
/// equal-width bins over its range, and the class label.
ScoreVector mutual_information_scores(const Dataset& d, int bins);

/// Population standard deviation of every feature.
Vector feature_std(const Dataset& d);

/// Sigma(i, j) = max(sigma_i, sigma_j).
Matrix sigma_matrix(const Dataset& d);
Matrix sigma_matrix(const Vector& feature_sd);

/// Min-max rescaling to [0, 1]. A constant vector maps to zeros and sets
/// `constant` when given.
Vector rescale_unit(const Vector& v, bool* constant = nullptr);

/// A = alpha * rescale(f) rescale(m)^T + (1 - alpha) * Sigma.
AdjacencyMatrix build_adjacency(const ScoreVector& f, const ScoreVector& m, const Matrix& sigma,
                                double alpha);
/// Same matrix with Sigma taken implicitly from the feature deviations, so no
/// n x n intermediate is stored.
AdjacencyMatrix build_adjacency(const ScoreVector& f, const ScoreVector& m, const Vector& feature_sd,
                                double alpha);

/// Everything the adjacency needs that does not depend on alpha, computed on
/// the sum-to-one normalized data.
struct GraphInputs {
  ScoreVector fisher;
  ScoreVector mi;
  Vector feature_sd;
  std::vector<bool> degenerate;
};

GraphInputs compute_graph_inputs(const Dataset& d, int bins);

}  // namespace ecfs
