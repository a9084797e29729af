#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecfs/matrix.hpp"

namespace ecfs {

/// Thrown when a Dataset would violate its invariants.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Samples in rows, features in columns, labels in {0, ..., C-1}.
///
/// Immutable once constructed: every class occurs at least once, T >= 2,
/// n >= 1, C >= 2 and all entries are finite.
class Dataset {
 public:
  Dataset(Matrix x, std::vector<int> y, std::vector<std::string> feature_names = {},
          std::vector<std::string> class_names = {});

  const Matrix& x() const noexcept { return x_; }
  std::span<const int> y() const noexcept { return y_; }
  std::size_t samples() const noexcept { return x_.rows(); }
  std::size_t features() const noexcept { return x_.cols(); }
  int num_classes() const noexcept { return num_classes_; }

  /// Empty when the source carried no header.
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
  /// class_names()[c] is the original label mapped to class c.
  const std::vector<std::string>& class_names() const noexcept { return class_names_; }

  std::string feature_name(std::size_t j) const;
  std::vector<std::size_t> class_counts() const;

  /// Row subset. Throws DatasetError if a class ends up empty.
  Dataset subset(std::span<const std::size_t> rows) const;
  /// Same samples and labels, different feature values.
  Dataset with_values(Matrix x) const;

 private:
  Matrix x_;
  std::vector<int> y_;
  std::vector<std::string> feature_names_;
  std::vector<std::string> class_names_;
  int num_classes_ = 0;
};

/// Feature indices sorted by descending score.
struct FeatureRanking {
  std::vector<std::size_t> order;
  std::vector<double> scores;  // aligned with order

  std::size_t size() const noexcept { return order.size(); }
  std::vector<std::size_t> top(std::size_t k) const;
};

}  // namespace ecfs
