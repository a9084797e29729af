#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "ecfs/dataset.hpp"
#include "ecfs/graph.hpp"
#include "ecfs/matrix.hpp"

namespace ecfs {

/// Dominant eigenpair of a nonnegative matrix.
struct EigenResult {
  double lambda0 = 0.0;
  Vector v0;  // unit 2-norm, entrywise >= 0
  int iterations = 0;
  double residual = 0.0;  // ||A v0 - lambda0 v0||_2
  bool degenerate = false;  // A v0 == 0, so lambda0 == 0
};

/// Raised when the dominant eigenvector does not settle, typically because
/// the two largest eigenvalues are (nearly) tied in magnitude.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual, int iterations)
      : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}
  double last_residual() const noexcept { return last_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

struct PowerOptions {
  double tol = 1e-10;
  int max_iter = 10'000;
};

/// v <- A v / ||A v|| from the all-ones vector until
/// ||A v - (v^T A v) v||_2 <= tol. Right eigenvector for asymmetric A.
EigenResult power_iteration(const Matrix& a, const PowerOptions& options = {});
inline EigenResult power_iteration(const AdjacencyMatrix& a, const PowerOptions& options = {}) {
  return power_iteration(a.a, options);
}

/// Independent route to the same eigenpair: A^l e / ||A^l e|| with l doubled
/// by repeated squaring, stopping once successive vectors agree to 1e-10 in
/// the max norm. `iterations` holds the final l.
EigenResult matrix_power_oracle(const Matrix& a, long long l_max = 1LL << 40);

/// Descending by score, ties broken by ascending feature index.
FeatureRanking rank_features(std::span<const double> scores);
inline FeatureRanking rank_features(const ScoreVector& scores) { return rank_features(scores.values); }

struct EcfsOptions {
  double alpha = 0.5;
  int bins = 0;  // 0 selects default_bins(T)
  PowerOptions power;
};

struct EcfsResult {
  FeatureRanking ranking;
  EigenResult eigen;
  AdjacencyMatrix adjacency;
};

/// Ranks features by eigenvector centrality on the feature graph.
FeatureRanking ecfs_rank(const Dataset& d, const EcfsOptions& options = {});
EcfsResult ecfs_rank_detailed(const Dataset& d, const EcfsOptions& options = {});
/// Reuses alpha-independent inputs; used by cross-validation over alpha.
EcfsResult ecfs_rank_from(const GraphInputs& inputs, double alpha, const PowerOptions& power = {});

}  // namespace ecfs
