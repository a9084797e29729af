#pragma once

#include <vector>

#include "ecfs/dataset.hpp"

namespace ecfs {

/// Per-column sum-to-one normalization, fit once and reusable on other rows.
///
/// A column with a negative minimum is first shifted so its minimum is 0.
/// A column whose shifted sum is 0 is degenerate and maps to all zeros.
class ColumnNormalizer {
 public:
  static ColumnNormalizer fit(const Dataset& d);

  Matrix transform(const Matrix& x) const;
  Dataset transform(const Dataset& d) const { return d.with_values(transform(d.x())); }

  const std::vector<double>& shifts() const noexcept { return shift_; }
  const std::vector<double>& sums() const noexcept { return sum_; }
  const std::vector<bool>& degenerate() const noexcept { return degenerate_; }

 private:
  std::vector<double> shift_;
  std::vector<double> sum_;
  std::vector<bool> degenerate_;
};

struct NormalizedDataset {
  Dataset data;
  std::vector<bool> degenerate;  // per feature
};

NormalizedDataset normalize_features(const Dataset& d);

/// z-scoring with statistics taken from the fitted rows; used as classifier
/// input. Constant columns get unit scale.
class Standardizer {
 public:
  static Standardizer fit(const Matrix& x);
  Matrix transform(const Matrix& x) const;

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

}  // namespace ecfs
