#include "ecfs/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace ecfs {

ColumnNormalizer ColumnNormalizer::fit(const Dataset& d) {
  const Matrix& x = d.x();
  ColumnNormalizer n;
  n.shift_.assign(x.cols(), 0.0);
  n.sum_.assign(x.cols(), 0.0);
  n.degenerate_.assign(x.cols(), false);
  for (std::size_t c = 0; c < x.cols(); ++c) {
    double lo = x(0, c), hi = x(0, c);
    for (std::size_t r = 1; r < x.rows(); ++r) {
      lo = std::min(lo, x(r, c));
      hi = std::max(hi, x(r, c));
    }
    // Constant columns carry no information and are shifted to zero.
    const double shift = (lo < 0.0 || lo == hi) ? -lo : 0.0;
    double sum = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) sum += x(r, c) + shift;
    n.shift_[c] = shift;
    n.sum_[c] = sum;
    n.degenerate_[c] = !(sum > 0.0);
  }
  return n;
}

Matrix ColumnNormalizer::transform(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = degenerate_[c] ? 0.0 : (x(r, c) + shift_[c]) / sum_[c];
  return out;
}

NormalizedDataset normalize_features(const Dataset& d) {
  const auto normalizer = ColumnNormalizer::fit(d);
  return {normalizer.transform(d), normalizer.degenerate()};
}

Standardizer Standardizer::fit(const Matrix& x) {
  Standardizer s;
  s.mean_.assign(x.cols(), 0.0);
  s.scale_.assign(x.cols(), 1.0);
  const double t = static_cast<double>(x.rows());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) sum += x(r, c);
    const double mean = sum / t;
    double ss = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) ss += (x(r, c) - mean) * (x(r, c) - mean);
    const double sd = std::sqrt(ss / t);
    s.mean_[c] = mean;
    if (sd > 0.0) s.scale_[c] = sd;
  }
  return s;
}

Matrix Standardizer::transform(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = (x(r, c) - mean_[c]) / scale_[c];
  return out;
}

}  // namespace ecfs
