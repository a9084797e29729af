#pragma once

#include <cstdint>
#include <span>

#include "ecfs/dataset.hpp"
#include "ecfs/matrix.hpp"

namespace ecfs::eval {

/// Linear decision function w.x + b over a subset of features.
struct LinearModel {
  Vector w;
  double b = 0.0;
  double C = 1.0;

  double decision(std::span<const double> x) const { return dot(w, x) + b; }
};

struct ClassifierOptions {
  double C = 1.0;
  int epochs = 50;
  std::uint64_t seed = 0;
};

/// Hinge-loss linear SVM trained by stochastic subgradient descent
/// (Pegasos): lambda = 1 / (C T), step 1 / (lambda t), one pass per epoch in a
/// seeded random order, with the bias learned as the weight of a constant
/// input. Rows whose label is 1 are positive, all others negative.
LinearModel train_linear_classifier(const Matrix& x, std::span<const int> labels,
                                    const ClassifierOptions& options);

/// Binary dataset front end: class 1 is positive, model uses only `selected`.
LinearModel train_linear_classifier(const Dataset& train, std::span<const std::size_t> selected,
                                    const ClassifierOptions& options);

Matrix select_columns(const Matrix& x, std::span<const std::size_t> columns);

/// Decision values for every row of x.
Vector decision_values(const LinearModel& model, const Matrix& x);

}  // namespace ecfs::eval
