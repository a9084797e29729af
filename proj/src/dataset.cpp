#include "ecfs/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace ecfs {

Dataset::Dataset(Matrix x, std::vector<int> y, std::vector<std::string> feature_names,
                 std::vector<std::string> class_names)
    : x_(std::move(x)),
      y_(std::move(y)),
      feature_names_(std::move(feature_names)),
      class_names_(std::move(class_names)) {
  if (x_.rows() < 2) throw DatasetError("dataset needs at least 2 samples");
  if (x_.cols() < 1) throw DatasetError("dataset needs at least 1 feature");
  if (y_.size() != x_.rows())
    throw DatasetError("label count " + std::to_string(y_.size()) +
                       " does not match sample count " + std::to_string(x_.rows()));
  if (!feature_names_.empty() && feature_names_.size() != x_.cols())
    throw DatasetError("feature name count does not match feature count");

  for (std::size_t r = 0; r < x_.rows(); ++r)
    for (std::size_t c = 0; c < x_.cols(); ++c)
      if (!std::isfinite(x_(r, c)))
        throw DatasetError("non-finite value at (" + std::to_string(r) + "," +
                           std::to_string(c) + ")");

  int max_label = -1;
  for (int label : y_) {
    if (label < 0) throw DatasetError("negative class label");
    max_label = std::max(max_label, label);
  }
  num_classes_ = max_label + 1;
  if (!class_names_.empty() && static_cast<int>(class_names_.size()) > num_classes_)
    num_classes_ = static_cast<int>(class_names_.size());
  if (num_classes_ < 2) throw DatasetError("dataset needs at least 2 classes");

  const auto counts = class_counts();
  for (int c = 0; c < num_classes_; ++c)
    if (counts[c] == 0) throw DatasetError("class " + std::to_string(c) + " has no samples");

  if (class_names_.empty())
    for (int c = 0; c < num_classes_; ++c) class_names_.push_back(std::to_string(c));
}

std::string Dataset::feature_name(std::size_t j) const {
  return feature_names_.empty() ? "f" + std::to_string(j) : feature_names_[j];
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(num_classes_, 0);
  for (int label : y_) ++counts[label];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Matrix sub(rows.size(), x_.cols());
  std::vector<int> labels(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = x_.row(rows[i]);
    std::copy(src.begin(), src.end(), sub.row(i).begin());
    labels[i] = y_[rows[i]];
  }
  return Dataset(std::move(sub), std::move(labels), feature_names_, class_names_);
}

Dataset Dataset::with_values(Matrix x) const {
  if (x.rows() != x_.rows() || x.cols() != x_.cols())
    throw DatasetError("replacement matrix has a different shape");
  return Dataset(std::move(x), y_, feature_names_, class_names_);
}

std::vector<std::size_t> FeatureRanking::top(std::size_t k) const {
  k = std::min(k, order.size());
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace ecfs
