#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ecfs/centrality.hpp"
#include "ecfs/dataset.hpp"
#include "ecfs/eval/classifier.hpp"

namespace ecfs::eval {

/// Called with every dataset a ranking is computed on.
using RankObserver = std::function<void(const Dataset&)>;

/// Fits a classifier on (train_x, train_y) and returns the AUC of its
/// decision values on the test rows. Inputs are z-scored with training
/// statistics. With more than two classes the one-vs-rest AUCs are averaged.
double heldout_auc(const Matrix& train_x, std::span<const int> train_y, const Matrix& test_x,
                   std::span<const int> test_y, int num_classes, const ClassifierOptions& options);

struct CvConfig {
  std::vector<double> alpha_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> c_grid = {0.01, 0.1, 1.0, 10.0};
  int folds = 5;
  std::size_t cardinality = 100;
  std::uint64_t seed = 0;
  int epochs = 50;
  int bins = 0;  // 0 selects default_bins of each fold's training size
  PowerOptions power;
  RankObserver on_rank;
};

struct CvCell {
  double alpha = 0.0;
  double c = 0.0;
  double mean_auc = 0.0;
};

struct CvResult {
  double alpha = 0.0;
  double c = 0.0;
  double best_auc = 0.0;
  std::vector<CvCell> table;  // alpha-major, both grids ascending
};

/// Grid search of (alpha, C) by stratified k-fold on the training data.
/// Each fold ranks with EC-FS on its own training part, keeps the top
/// `cardinality` features and scores AUC on the held-out part. Returns the
/// pair with the highest mean AUC; ties go to the smaller alpha, then the
/// smaller C.
CvResult cross_validate(const Dataset& train, const CvConfig& config);

}  // namespace ecfs::eval
