#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecfs/centrality.hpp"
#include "ecfs/dataset.hpp"
#include "ecfs/eval/cross_validation.hpp"
#include "ecfs/eval/metrics.hpp"
#include "ecfs/eval/split.hpp"

namespace ecfs::eval {

enum class Method { ecfs, fisher, mi };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct EvalConfig {
  SplitPlan plan;
  std::vector<Method> methods = {Method::ecfs, Method::fisher, Method::mi};
  std::vector<std::size_t> cardinalities = {50, 100, 150, 200};
  /// Fixed EC-FS alpha; empty means cross-validate (alpha, C) on every
  /// training split.
  std::optional<double> alpha = 0.5;
  double c = 1.0;  // classifier C when alpha is fixed
  CvConfig cv;     // grids, folds and cardinality when alpha is empty
  int bins = 0;
  int epochs = 50;
  PowerOptions power;
  int workers = 1;
  bool timing = false;
  RankObserver on_rank;
};

struct CardinalitySummary {
  std::size_t cardinality = 0;
  double mean_auc = 0.0;
  double sd_auc = 0.0;
  std::vector<double> aucs;  // one per repeat
};

struct MethodSummary {
  Method method = Method::ecfs;
  std::vector<CardinalitySummary> auc;
  double average_auc = 0.0;
  std::vector<StabilityPoint> stability;
  std::vector<FeatureRanking> rankings;  // one per repeat
  double ranking_seconds = 0.0;          // filled only when timing is on
};

struct TTestEntry {
  Method method = Method::ecfs;
  Method baseline = Method::fisher;
  std::size_t cardinality = 0;
  TTestResult result;
};

struct Selection {
  int repeat = 0;
  double alpha = 0.0;
  double c = 0.0;
  std::optional<double> cv_auc;
};

struct EvalReport {
  std::size_t samples = 0;
  std::size_t features = 0;
  std::vector<std::string> class_names;
  EvalConfig config;
  std::vector<MethodSummary> methods;
  std::vector<TTestEntry> t_tests;
  std::vector<Selection> selections;
};

/// Repeated train/test evaluation. Rankings, normalization, classifier
/// scaling and the (alpha, C) choice use only each repeat's training rows.
/// Results are independent of `workers`.
EvalReport run_evaluation(const Dataset& d, const EvalConfig& config);

struct StabilityReport {
  std::size_t features = 0;
  std::vector<std::size_t> cardinalities;
  std::vector<std::pair<std::string, std::vector<StabilityPoint>>> curves;  // per method
};

/// Rankings on the training side of every repeat, summarized as Kuncheva
/// stability curves. Cardinalities must be below the feature count.
StabilityReport run_stability(const Dataset& d, const EvalConfig& config,
                              const std::vector<std::size_t>& cardinalities);

}  // namespace ecfs::eval
