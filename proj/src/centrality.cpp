#include "ecfs/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ecfs {
namespace {

void check_nonnegative(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("expected a non-empty square matrix");
  for (double v : a.values())
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("adjacency entries must be finite and nonnegative");
}

Vector unit_ones(std::size_t n) { return Vector(n, 1.0 / std::sqrt(static_cast<double>(n))); }

void clamp_roundoff(Vector& v) {
  for (double& x : v)
    if (x < 0.0 && x >= -1e-12) x = 0.0;
}

double residual_of(const Matrix& a, const Vector& v, double lambda) {
  Vector av = multiply(a, v);
  for (std::size_t i = 0; i < av.size(); ++i) av[i] -= lambda * v[i];
  return norm2(av);
}

}  // namespace

EigenResult power_iteration(const Matrix& a, const PowerOptions& options) {
  check_nonnegative(a);
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

  const std::size_t n = a.rows();
  Vector v = unit_ones(n);
  Vector w(n), diff(n);
  double residual = 0.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    multiply_into(a, v, w);
    const double lambda = dot(v, w);
    for (std::size_t i = 0; i < n; ++i) diff[i] = w[i] - lambda * v[i];
    residual = norm2(diff);
    const double norm = norm2(w);
    if (residual <= options.tol || norm == 0.0) {
      clamp_roundoff(v);
      return {norm == 0.0 ? 0.0 : lambda, std::move(v), it, residual, norm == 0.0};
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge after " + std::to_string(options.max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual, options.max_iter);
}

EigenResult matrix_power_oracle(const Matrix& a, long long l_max) {
  check_nonnegative(a);
  const std::size_t n = a.rows();
  const Vector e(n, 1.0);

  const double scale = *std::max_element(a.values().begin(), a.values().end());
  if (scale == 0.0) return {0.0, unit_ones(n), 0, 0.0, true};

  Matrix power = a;  // A^l up to a positive factor
  for (double& x : power.values()) x /= scale;

  Vector prev = unit_ones(n);
  long long l = 1;
  while (true) {
    Vector w = multiply(power, e);
    const double norm = norm2(w);
    if (norm == 0.0) {
      // A^l e vanished: prev is annihilated by a power of A; lambda0 is 0.
      return {0.0, prev, static_cast<int>(l), residual_of(a, prev, 0.0), true};
    }
    for (double& x : w) x /= norm;

    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(w[i] - prev[i]));
    if (gap <= 1e-10) {
      clamp_roundoff(w);
      const double lambda = dot(w, multiply(a, w));
      const double res = residual_of(a, w, lambda);
      // A stalled iterate that is not an eigenvector signals a periodic spectrum.
      if (res <= 1e-6 * scale)
        return {lambda, std::move(w), static_cast<int>(std::min<long long>(l, 1LL << 30)), res, false};
    }
    if (l >= l_max)
      throw ConvergenceError("matrix power did not converge by l = " + std::to_string(l), gap,
                             static_cast<int>(std::min<long long>(l, 1LL << 30)));

    prev = std::move(w);
    power = multiply(power, power);
    const double peak = *std::max_element(power.values().begin(), power.values().end());
    if (peak > 0.0)
      for (double& x : power.values()) x /= peak;
    l *= 2;
  }
}

FeatureRanking rank_features(std::span<const double> scores) {
  FeatureRanking out;
  out.order.resize(scores.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(), [&](std::size_t i, std::size_t j) {
    if (scores[i] != scores[j]) return scores[i] > scores[j];
    return i < j;
  });
  out.scores.reserve(scores.size());
  for (auto i : out.order) out.scores.push_back(scores[i]);
  return out;
}

EcfsResult ecfs_rank_from(const GraphInputs& inputs, double alpha, const PowerOptions& power) {
  EcfsResult out;
  out.adjacency = build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, alpha);
  out.eigen = power_iteration(out.adjacency, power);
  out.ranking = rank_features(out.eigen.v0);
  return out;
}

EcfsResult ecfs_rank_detailed(const Dataset& d, const EcfsOptions& options) {
  const int bins = options.bins > 0 ? options.bins : default_bins(d.samples());
  return ecfs_rank_from(compute_graph_inputs(d, bins), options.alpha, options.power);
}

FeatureRanking ecfs_rank(const Dataset& d, const EcfsOptions& options) {
  return ecfs_rank_detailed(d, options).ranking;
}

}  // namespace ecfs
