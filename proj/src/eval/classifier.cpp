#include "ecfs/eval/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ecfs::eval {

LinearModel train_linear_classifier(const Matrix& x, std::span<const int> labels,
                                    const ClassifierOptions& options) {
  if (x.rows() != labels.size()) throw std::invalid_argument("label count does not match rows");
  if (x.cols() == 0) throw std::invalid_argument("no features selected");
  if (!(options.C > 0.0)) throw std::invalid_argument("C must be positive");
  if (options.epochs < 1) throw std::invalid_argument("epochs must be positive");
  const auto n_pos = std::count(labels.begin(), labels.end(), 1);
  if (n_pos == 0 || n_pos == static_cast<std::ptrdiff_t>(labels.size()))
    throw std::invalid_argument("training set has a single class");

  const std::size_t t_count = x.rows(), k = x.cols();
  const double lambda = 1.0 / (options.C * static_cast<double>(t_count));
  const double radius = 1.0 / std::sqrt(lambda);

  Vector w(k, 0.0);
  double b = 0.0;
  std::vector<std::size_t> order(t_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(options.seed);

  double step_count = 0.0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) {
      step_count += 1.0;
      const double eta = 1.0 / (lambda * step_count);
      const double label = labels[i] == 1 ? 1.0 : -1.0;
      const auto xi = x.row(i);
      const double margin = label * (dot(w, xi) + b);
      const double shrink = 1.0 - eta * lambda;
      for (double& wj : w) wj *= shrink;
      b *= shrink;
      if (margin < 1.0) {
        for (std::size_t j = 0; j < k; ++j) w[j] += eta * label * xi[j];
        b += eta * label;
      }
      const double norm = std::sqrt(dot(w, w) + b * b);
      if (norm > radius) {
        const double s = radius / norm;
        for (double& wj : w) wj *= s;
        b *= s;
      }
    }
  }
  return {std::move(w), b, options.C};
}

Matrix select_columns(const Matrix& x, std::span<const std::size_t> columns) {
  Matrix out(x.rows(), columns.size());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = x(r, columns[j]);
  return out;
}

LinearModel train_linear_classifier(const Dataset& train, std::span<const std::size_t> selected,
                                    const ClassifierOptions& options) {
  if (train.num_classes() != 2) throw std::invalid_argument("binary labels required");
  if (selected.empty()) throw std::invalid_argument("no features selected");
  return train_linear_classifier(select_columns(train.x(), selected), train.y(), options);
}

Vector decision_values(const LinearModel& model, const Matrix& x) {
  Vector out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = model.decision(x.row(r));
  return out;
}

}  // namespace ecfs::eval
