#include <gtest/gtest.h>

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ecfs/eval/protocol.hpp"
#include "ecfs/eval/report.hpp"
#include "ecfs/synthetic.hpp"

using namespace ecfs;
using namespace ecfs::eval;

namespace {

EvalConfig small_config() {
  EvalConfig cfg;
  cfg.plan = {2.0 / 3.0, 5, 17, true};
  cfg.cardinalities = {5, 10, 20};
  cfg.epochs = 20;
  return cfg;
}

const Dataset& fixture() {
  static const auto s = generate_synthetic({60, 40, 6, 1.2, 1.0, 31});
  return s.data;
}

// Column 0 carries the sample id so a ranker's input can be traced back.
Dataset with_ids(const Dataset& d) {
  Matrix x = d.x();
  for (std::size_t r = 0; r < x.rows(); ++r) x(r, 0) = static_cast<double>(r);
  return d.with_values(x);
}

}  // namespace

TEST(Protocol, ReportShape) {
  const auto report = run_evaluation(fixture(), small_config());
  ASSERT_EQ(report.methods.size(), 3u);
  for (const auto& m : report.methods) {
    ASSERT_EQ(m.auc.size(), 3u);
    for (const auto& c : m.auc) {
      EXPECT_EQ(c.aucs.size(), 5u);
      for (double a : c.aucs) {
        EXPECT_GE(a, 0.0);
        EXPECT_LE(a, 1.0);
      }
    }
    EXPECT_EQ(m.rankings.size(), 5u);
    ASSERT_EQ(m.stability.size(), 3u);
    for (const auto& p : m.stability) {
      EXPECT_GE(p.kuncheva, -1.0);
      EXPECT_LE(p.kuncheva, 1.0);
    }
  }
  // EC-FS against fisher and mi at every cardinality.
  ASSERT_EQ(report.t_tests.size(), 6u);
  for (const auto& t : report.t_tests) {
    EXPECT_EQ(t.method, Method::ecfs);
    EXPECT_NE(t.baseline, Method::ecfs);
    EXPECT_GE(t.result.p, 0.0);
    EXPECT_LE(t.result.p, 1.0);
  }
  EXPECT_EQ(report.selections.size(), 5u);
}

TEST(Protocol, IndependentOfWorkerCount) {
  auto cfg = small_config();
  const auto one = to_json(run_evaluation(fixture(), cfg)).dump();
  cfg.workers = 3;
  const auto many = to_json(run_evaluation(fixture(), cfg)).dump();
  EXPECT_EQ(one, many);
  EXPECT_EQ(one, to_json(run_evaluation(fixture(), cfg)).dump());
}

TEST(Protocol, RankersSeeTrainingRowsOnly) {
  const Dataset d = with_ids(fixture());
  for (bool cv : {false, true}) {
    auto cfg = small_config();
    cfg.plan.n_repeats = 3;
    if (cv) {
      cfg.alpha.reset();
      cfg.cv.alpha_grid = {0.2, 0.8};
      cfg.cv.c_grid = {1.0};
      cfg.cv.folds = 3;
      cfg.cv.cardinality = 5;
    }
    std::mutex mu;
    std::vector<std::vector<std::size_t>> seen;
    cfg.on_rank = [&](const Dataset& ranked) {
      std::vector<std::size_t> ids;
      for (std::size_t r = 0; r < ranked.samples(); ++r) ids.push_back(static_cast<std::size_t>(ranked.x()(r, 0)));
      std::sort(ids.begin(), ids.end());
      std::lock_guard lock(mu);
      seen.push_back(std::move(ids));
    };
    cfg.workers = 2;
    run_evaluation(d, cfg);

    const auto splits = make_split_indices(d, cfg.plan);
    ASSERT_FALSE(seen.empty());
    for (const auto& ids : seen) {
      const bool inside_some_train = std::any_of(splits.begin(), splits.end(), [&](const SplitIndices& s) {
        return std::includes(s.train.begin(), s.train.end(), ids.begin(), ids.end());
      });
      EXPECT_TRUE(inside_some_train) << "ranker saw rows outside any training split (cv=" << cv << ")";
      EXPECT_LT(ids.size(), d.samples());
    }
    // 3 methods per repeat, plus 3 folds per repeat when cross-validating.
    EXPECT_EQ(seen.size(), cv ? 18u : 9u);
  }
}

TEST(Protocol, CrossValidatedSelectionsRecorded) {
  auto cfg = small_config();
  cfg.plan.n_repeats = 2;
  cfg.alpha.reset();
  cfg.cv.alpha_grid = {0.0, 1.0};
  cfg.cv.c_grid = {0.1, 1.0};
  cfg.cv.folds = 3;
  cfg.cv.cardinality = 10;
  const auto report = run_evaluation(fixture(), cfg);
  for (const auto& s : report.selections) {
    EXPECT_TRUE(s.alpha == 0.0 || s.alpha == 1.0);
    EXPECT_TRUE(s.c == 0.1 || s.c == 1.0);
    EXPECT_TRUE(s.cv_auc.has_value());
  }
  const auto j = to_json(report);
  EXPECT_EQ(j["config"]["alpha"], "cv");
  EXPECT_TRUE(j["selection"][0].contains("cv_auc"));
}

TEST(Protocol, RejectsCardinalityAboveFeatureCount) {
  auto cfg = small_config();
  cfg.cardinalities = {41};
  EXPECT_THROW(run_evaluation(fixture(), cfg), std::invalid_argument);
}

TEST(Protocol, TimingOnlyWhenRequested) {
  auto cfg = small_config();
  cfg.plan.n_repeats = 2;
  EXPECT_FALSE(to_json(run_evaluation(fixture(), cfg))["methods"][0].contains("ranking_seconds"));
  cfg.timing = true;
  EXPECT_TRUE(to_json(run_evaluation(fixture(), cfg))["methods"][0].contains("ranking_seconds"));
}

TEST(Protocol, CsvLayout) {
  auto cfg = small_config();
  cfg.plan.n_repeats = 2;
  std::ostringstream out;
  write_csv(run_evaluation(fixture(), cfg), out);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "method,5,10,20,average");
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("ecfs,", 0), 0u);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 4);
}

TEST(Stability, ScaledCopiesGiveAPerfectCurve) {
  // Every column is a power-of-two multiple of the label, so all rankers tie
  // everywhere and return index order on every split.
  Matrix x(30, 12);
  std::vector<int> y(30);
  for (std::size_t r = 0; r < 30; ++r) {
    y[r] = static_cast<int>(r % 2);
    for (std::size_t c = 0; c < 12; ++c) x(r, c) = std::ldexp(1.0 + y[r], static_cast<int>(c % 4));
  }
  auto cfg = small_config();
  const auto report = run_stability(Dataset(x, y), cfg, {2, 6, 11});
  ASSERT_EQ(report.curves.size(), 3u);
  for (const auto& [name, curve] : report.curves)
    for (const auto& p : curve) EXPECT_EQ(p.kuncheva, 1.0) << name;
}

TEST(Stability, RangeOnSyntheticData) {
  auto cfg = small_config();
  cfg.plan.n_repeats = 4;
  const auto report = run_stability(fixture(), cfg, {5, 10, 20, 39});
  for (const auto& [name, curve] : report.curves) {
    ASSERT_EQ(curve.size(), 4u);
    for (const auto& p : curve) {
      EXPECT_GE(p.kuncheva, -1.0);
      EXPECT_LE(p.kuncheva, 1.0);
    }
  }
  EXPECT_THROW(run_stability(fixture(), cfg, {40}), std::invalid_argument);
}
