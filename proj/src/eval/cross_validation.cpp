#include "ecfs/eval/cross_validation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecfs/eval/metrics.hpp"
#include "ecfs/eval/split.hpp"
#include "ecfs/normalize.hpp"

namespace ecfs::eval {

double heldout_auc(const Matrix& train_x, std::span<const int> train_y, const Matrix& test_x,
                   std::span<const int> test_y, int num_classes, const ClassifierOptions& options) {
  const auto scaler = Standardizer::fit(train_x);
  const Matrix tr = scaler.transform(train_x);
  const Matrix te = scaler.transform(test_x);

  auto one_vs_rest = [&](int positive) {
    std::vector<int> ytr(train_y.size()), yte(test_y.size());
    for (std::size_t i = 0; i < ytr.size(); ++i) ytr[i] = train_y[i] == positive ? 1 : 0;
    for (std::size_t i = 0; i < yte.size(); ++i) yte[i] = test_y[i] == positive ? 1 : 0;
    const auto model = train_linear_classifier(tr, ytr, options);
    return roc_auc(decision_values(model, te), yte);
  };

  if (num_classes == 2) return one_vs_rest(1);
  double sum = 0.0;
  for (int c = 0; c < num_classes; ++c) sum += one_vs_rest(c);
  return sum / num_classes;
}

CvResult cross_validate(const Dataset& train, const CvConfig& config) {
  if (config.folds < 2) throw std::invalid_argument("cross-validation needs at least 2 folds");
  if (config.alpha_grid.empty() || config.c_grid.empty()) throw std::invalid_argument("empty grid");
  if (config.cardinality == 0) throw std::invalid_argument("cardinality must be positive");

  auto alphas = config.alpha_grid;
  auto cs = config.c_grid;
  std::sort(alphas.begin(), alphas.end());
  std::sort(cs.begin(), cs.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  const auto folds = stratified_folds(train, config.folds, config.seed);
  std::vector<double> auc_sum(alphas.size() * cs.size(), 0.0);

  for (std::size_t f = 0; f < folds.size(); ++f) {
    const Dataset fold_train = train.subset(folds[f].train);
    const Dataset fold_valid = train.subset(folds[f].test);
    if (config.on_rank) config.on_rank(fold_train);

    const int bins = config.bins > 0 ? config.bins : default_bins(fold_train.samples());
    const GraphInputs inputs = compute_graph_inputs(fold_train, bins);
    const std::size_t k = std::min(config.cardinality, train.features());

    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const auto ranking = ecfs_rank_from(inputs, alphas[a], config.power).ranking;
      const auto selected = ranking.top(k);
      const Matrix tr = select_columns(fold_train.x(), selected);
      const Matrix va = select_columns(fold_valid.x(), selected);
      for (std::size_t c = 0; c < cs.size(); ++c) {
        ClassifierOptions opts{cs[c], config.epochs, derive_seed(config.seed, f)};
        auc_sum[a * cs.size() + c] +=
            heldout_auc(tr, fold_train.y(), va, fold_valid.y(), train.num_classes(), opts);
      }
    }
  }

  CvResult out;
  bool first = true;
  for (std::size_t a = 0; a < alphas.size(); ++a)
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const double m = auc_sum[a * cs.size() + c] / static_cast<double>(folds.size());
      out.table.push_back({alphas[a], cs[c], m});
      if (first || m > out.best_auc) {
        out.alpha = alphas[a];
        out.c = cs[c];
        out.best_auc = m;
        first = false;
      }
    }
  return out;
}

}  // namespace ecfs::eval
