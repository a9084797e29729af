#include "ecfs/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace ecfs::eval {

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("roc_auc: size mismatch");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return scores[i] < scores[j]; });

  // Twice the rank sum of positives, with tied groups sharing their mean rank;
  // doubling keeps every quantity an integer.
  long long twice_rank_sum = 0;
  long long positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const long long twice_mid_rank = static_cast<long long>(i + 1) + static_cast<long long>(j + 1);
    for (std::size_t g = i; g <= j; ++g)
      if (labels[order[g]] == 1) {
        twice_rank_sum += twice_mid_rank;
        ++positives;
      }
    i = j + 1;
  }
  const long long negatives = static_cast<long long>(n) - positives;
  if (positives == 0 || negatives == 0) throw std::invalid_argument("roc_auc needs both classes");

  const long long twice_u = twice_rank_sum - positives * (positives + 1);
  return static_cast<double>(twice_u) / (2.0 * static_cast<double>(positives * negatives));
}

double kuncheva_index(std::span<const std::size_t> a, std::span<const std::size_t> b, std::size_t n) {
  if (a.size() != b.size()) throw std::invalid_argument("kuncheva_index: subsets differ in size");
  const std::size_t k = a.size();
  if (k == 0 || k >= n) throw std::invalid_argument("kuncheva_index: undefined for k = 0 or k = N");

  std::vector<std::size_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (std::adjacent_find(sa.begin(), sa.end()) != sa.end() ||
      std::adjacent_find(sb.begin(), sb.end()) != sb.end())
    throw std::invalid_argument("kuncheva_index: duplicate feature in subset");
  if (sa.back() >= n || sb.back() >= n) throw std::invalid_argument("kuncheva_index: index out of range");

  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  const auto r = static_cast<long long>(common.size());
  const auto kk = static_cast<long long>(k), nn = static_cast<long long>(n);
  return static_cast<double>(r * nn - kk * kk) / static_cast<double>(kk * (nn - kk));
}

std::vector<StabilityPoint> stability_curve(std::span<const FeatureRanking> rankings,
                                            std::span<const std::size_t> cardinalities) {
  if (rankings.size() < 2) throw std::invalid_argument("stability_curve needs at least 2 rankings");
  const std::size_t n = rankings.front().size();
  for (const auto& r : rankings)
    if (r.size() != n) throw std::invalid_argument("stability_curve: rankings differ in length");

  std::vector<StabilityPoint> curve;
  for (auto k : cardinalities) {
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < rankings.size(); ++i) {
      const auto top_i = rankings[i].top(k);
      for (std::size_t j = i + 1; j < rankings.size(); ++j) {
        sum += kuncheva_index(top_i, rankings[j].top(k), n);
        ++pairs;
      }
    }
    curve.push_back({k, sum / static_cast<double>(pairs)});
  }
  return curve;
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_sd(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

TTestResult two_sample_ttest(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 2 || y.size() < 2) throw std::invalid_argument("t-test needs at least 2 values per sample");
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  const double mx = mean(x), my = mean(y);
  double ssx = 0.0, ssy = 0.0;
  for (double v : x) ssx += (v - mx) * (v - mx);
  for (double v : y) ssy += (v - my) * (v - my);

  TTestResult out;
  out.df = nx + ny - 2.0;
  const double pooled = (ssx + ssy) / out.df;
  if (pooled == 0.0) {
    out.t = mx == my ? 0.0 : std::copysign(INFINITY, mx - my);
    out.p = mx == my ? 1.0 : 0.0;
    return out;
  }
  out.t = (mx - my) / std::sqrt(pooled * (1.0 / nx + 1.0 / ny));
  // P(|T| > t) = I_{df / (df + t^2)}(df / 2, 1 / 2)
  const double z = out.df / (out.df + out.t * out.t);
  out.p = std::clamp(boost::math::ibeta(out.df / 2.0, 0.5, z), 0.0, 1.0);
  return out;
}

}  // namespace ecfs::eval
