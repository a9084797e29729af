#include "ecfs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecfs/normalize.hpp"

namespace ecfs {
namespace {

double ratio_with_epsilon(double numerator, double denominator) {
  if (denominator > 0.0) return numerator / denominator;
  return numerator > 0.0 ? numerator / kFisherEpsilon : 0.0;
}

}  // namespace

ScoreVector fisher_scores(const Dataset& d) {
  const Matrix& x = d.x();
  const auto y = d.y();
  const int classes = d.num_classes();
  const auto counts = d.class_counts();
  const double total = static_cast<double>(d.samples());

  ScoreVector out{Vector(d.features(), 0.0), ScoreKind::fisher};
  std::vector<double> sum(classes), mean(classes), ss(classes);
  for (std::size_t j = 0; j < d.features(); ++j) {
    std::fill(sum.begin(), sum.end(), 0.0);
    std::fill(ss.begin(), ss.end(), 0.0);
    double overall = 0.0;
    for (std::size_t r = 0; r < d.samples(); ++r) {
      sum[y[r]] += x(r, j);
      overall += x(r, j);
    }
    overall /= total;
    for (int c = 0; c < classes; ++c) mean[c] = sum[c] / static_cast<double>(counts[c]);
    for (std::size_t r = 0; r < d.samples(); ++r) {
      const double dev = x(r, j) - mean[y[r]];
      ss[y[r]] += dev * dev;
    }
    double var_total = 0.0;
    for (int c = 0; c < classes; ++c) var_total += ss[c] / static_cast<double>(counts[c]);

    double numerator = 0.0;
    if (classes == 2) {
      const double gap = mean[0] - mean[1];
      numerator = gap * gap;
    } else {
      for (int c = 0; c < classes; ++c) numerator += (mean[c] - overall) * (mean[c] - overall);
    }
    out.values[j] = ratio_with_epsilon(numerator, var_total);
  }
  return out;
}

int default_bins(std::size_t samples) {
  return std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(samples)))));
}

ScoreVector mutual_information_scores(const Dataset& d, int bins) {
  if (bins < 2) throw std::invalid_argument("mutual information needs at least 2 bins");
  const Matrix& x = d.x();
  const auto y = d.y();
  const int classes = d.num_classes();
  const auto class_counts = d.class_counts();
  const double total = static_cast<double>(d.samples());

  ScoreVector out{Vector(d.features(), 0.0), ScoreKind::mutual_information};
  std::vector<std::size_t> joint(static_cast<std::size_t>(bins) * classes);
  std::vector<std::size_t> marginal(bins);
  for (std::size_t j = 0; j < d.features(); ++j) {
    double lo = x(0, j), hi = x(0, j);
    for (std::size_t r = 1; r < d.samples(); ++r) {
      lo = std::min(lo, x(r, j));
      hi = std::max(hi, x(r, j));
    }
    if (!(hi > lo)) continue;

    std::fill(joint.begin(), joint.end(), 0);
    std::fill(marginal.begin(), marginal.end(), 0);
    const double width = hi - lo;
    for (std::size_t r = 0; r < d.samples(); ++r) {
      auto b = static_cast<int>((x(r, j) - lo) / width * bins);
      b = std::clamp(b, 0, bins - 1);
      ++joint[static_cast<std::size_t>(b) * classes + y[r]];
      ++marginal[b];
    }

    double mi = 0.0;
    for (int b = 0; b < bins; ++b)
      for (int c = 0; c < classes; ++c) {
        const auto n_zy = joint[static_cast<std::size_t>(b) * classes + c];
        if (n_zy == 0) continue;
        const double p_zy = static_cast<double>(n_zy) / total;
        mi += p_zy * std::log(static_cast<double>(n_zy) * total /
                              (static_cast<double>(marginal[b]) * static_cast<double>(class_counts[c])));
      }
    out.values[j] = std::max(mi, 0.0);
  }
  return out;
}

Vector feature_std(const Dataset& d) {
  const Matrix& x = d.x();
  const double total = static_cast<double>(d.samples());
  Vector sd(d.features());
  for (std::size_t j = 0; j < d.features(); ++j) {
    double sum = 0.0;
    for (std::size_t r = 0; r < d.samples(); ++r) sum += x(r, j);
    const double mean = sum / total;
    double ss = 0.0;
    for (std::size_t r = 0; r < d.samples(); ++r) ss += (x(r, j) - mean) * (x(r, j) - mean);
    sd[j] = std::sqrt(ss / total);
  }
  return sd;
}

Matrix sigma_matrix(const Vector& feature_sd) {
  const std::size_t n = feature_sd.size();
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = s.row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] = std::max(feature_sd[i], feature_sd[j]);
  }
  return s;
}

Matrix sigma_matrix(const Dataset& d) { return sigma_matrix(feature_std(d)); }

Vector rescale_unit(const Vector& v, bool* constant) {
  Vector out(v.size(), 0.0);
  if (v.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double lo = *lo_it, range = *hi_it - *lo_it;
  if (constant) *constant = !(range > 0.0);
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - lo) / range;
  return out;
}

namespace {

template <typename SigmaAt>
AdjacencyMatrix blend(const ScoreVector& f, const ScoreVector& m, std::size_t n, double alpha, SigmaAt sigma) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (f.size() != n || m.size() != n) throw std::invalid_argument("build_adjacency: dimension mismatch");

  AdjacencyMatrix out;
  out.alpha = alpha;
  const Vector fs = rescale_unit(f.values, &out.fisher_constant);
  const Vector ms = rescale_unit(m.values, &out.mi_constant);
  out.a = Matrix(n, n);
  const double beta = 1.0 - alpha;
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.a.row(i);
    const double fi = alpha * fs[i];
    for (std::size_t j = 0; j < n; ++j) dst[j] = fi * ms[j] + beta * sigma(i, j);
  }
  return out;
}

}  // namespace

AdjacencyMatrix build_adjacency(const ScoreVector& f, const ScoreVector& m, const Matrix& sigma,
                                double alpha) {
  if (sigma.rows() != sigma.cols()) throw std::invalid_argument("build_adjacency: dimension mismatch");
  return blend(f, m, sigma.rows(), alpha, [&](std::size_t i, std::size_t j) { return sigma(i, j); });
}

AdjacencyMatrix build_adjacency(const ScoreVector& f, const ScoreVector& m, const Vector& feature_sd,
                                double alpha) {
  return blend(f, m, feature_sd.size(), alpha,
               [&](std::size_t i, std::size_t j) { return std::max(feature_sd[i], feature_sd[j]); });
}

GraphInputs compute_graph_inputs(const Dataset& d, int bins) {
  auto normalized = normalize_features(d);
  const Dataset& nd = normalized.data;
  return {fisher_scores(nd), mutual_information_scores(nd, bins), feature_std(nd),
          std::move(normalized.degenerate)};
}

}  // namespace ecfs
