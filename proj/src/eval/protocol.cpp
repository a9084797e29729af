#include "ecfs/eval/protocol.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "ecfs/baselines.hpp"
#include "ecfs/eval/classifier.hpp"

namespace ecfs::eval {
namespace {

struct MethodOutcome {
  FeatureRanking ranking;
  std::vector<double> aucs;  // per cardinality
  double seconds = 0.0;
};

struct RepeatOutcome {
  Selection selection;
  std::vector<MethodOutcome> methods;
};

FeatureRanking rank_with(Method m, const Dataset& train, double alpha, const EvalConfig& cfg) {
  switch (m) {
    case Method::ecfs: return ecfs_rank(train, {alpha, cfg.bins, cfg.power});
    case Method::fisher: return rank_by_fisher(train);
    case Method::mi: return rank_by_mi(train, cfg.bins);
  }
  throw std::logic_error("unknown method");
}

RepeatOutcome run_repeat(const Dataset& d, const EvalConfig& cfg, int repeat, bool classify) {
  const auto split = repeat_split(d, cfg.plan, repeat);
  const Dataset train = d.subset(split.train);
  const Dataset test = d.subset(split.test);
  const std::uint64_t seed = derive_seed(cfg.plan.seed, static_cast<std::uint64_t>(repeat));

  RepeatOutcome out;
  out.selection.repeat = repeat;
  if (cfg.alpha) {
    out.selection.alpha = *cfg.alpha;
    out.selection.c = cfg.c;
  } else {
    CvConfig cv = cfg.cv;
    cv.seed = derive_seed(seed, 1);
    cv.epochs = cfg.epochs;
    cv.bins = cfg.bins;
    cv.power = cfg.power;
    cv.on_rank = cfg.on_rank;
    const auto chosen = cross_validate(train, cv);
    out.selection.alpha = chosen.alpha;
    out.selection.c = chosen.c;
    out.selection.cv_auc = chosen.best_auc;
  }

  for (Method m : cfg.methods) {
    MethodOutcome mo;
    if (cfg.on_rank) cfg.on_rank(train);
    const auto start = std::chrono::steady_clock::now();
    mo.ranking = rank_with(m, train, out.selection.alpha, cfg);
    mo.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (classify) {
      for (auto k : cfg.cardinalities) {
        const auto selected = mo.ranking.top(k);
        const ClassifierOptions opts{out.selection.c, cfg.epochs, derive_seed(seed, 2)};
        mo.aucs.push_back(heldout_auc(select_columns(train.x(), selected), train.y(),
                                      select_columns(test.x(), selected), test.y(), d.num_classes(), opts));
      }
    }
    out.methods.push_back(std::move(mo));
  }
  return out;
}

std::vector<RepeatOutcome> run_repeats(const Dataset& d, const EvalConfig& cfg, bool classify) {
  const int repeats = cfg.plan.n_repeats;
  if (repeats < 1) throw std::invalid_argument("n_repeats must be positive");
  if (cfg.methods.empty()) throw std::invalid_argument("no methods selected");
  for (auto k : cfg.cardinalities)
    if (k == 0 || k > d.features())
      throw std::invalid_argument("cardinality " + std::to_string(k) + " outside [1, " +
                                  std::to_string(d.features()) + "]");

  std::vector<RepeatOutcome> outcomes(repeats);
  std::vector<std::exception_ptr> errors(repeats);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < repeats; r = next++) {
      try {
        outcomes[r] = run_repeat(d, cfg, r, classify);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(cfg.workers, 1, repeats);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return outcomes;
}

std::vector<StabilityPoint> stability_or_empty(const std::vector<FeatureRanking>& rankings,
                                               const std::vector<std::size_t>& cardinalities,
                                               std::size_t features) {
  std::vector<std::size_t> valid;
  for (auto k : cardinalities)
    if (k > 0 && k < features) valid.push_back(k);
  if (rankings.size() < 2 || valid.empty()) return {};
  return stability_curve(rankings, valid);
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::ecfs: return "ecfs";
    case Method::fisher: return "fisher";
    case Method::mi: return "mi";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "ecfs") return Method::ecfs;
  if (name == "fisher") return Method::fisher;
  if (name == "mi") return Method::mi;
  return std::nullopt;
}

EvalReport run_evaluation(const Dataset& d, const EvalConfig& config) {
  const auto outcomes = run_repeats(d, config, true);

  EvalReport report;
  report.samples = d.samples();
  report.features = d.features();
  report.class_names = d.class_names();
  report.config = config;
  report.config.on_rank = nullptr;

  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    MethodSummary summary;
    summary.method = config.methods[mi];
    for (const auto& o : outcomes) {
      summary.rankings.push_back(o.methods[mi].ranking);
      summary.ranking_seconds += o.methods[mi].seconds;
    }
    if (!config.timing) summary.ranking_seconds = 0.0;

    double total = 0.0;
    for (std::size_t ki = 0; ki < config.cardinalities.size(); ++ki) {
      CardinalitySummary cs;
      cs.cardinality = config.cardinalities[ki];
      for (const auto& o : outcomes) cs.aucs.push_back(o.methods[mi].aucs[ki]);
      cs.mean_auc = mean(cs.aucs);
      cs.sd_auc = sample_sd(cs.aucs);
      total += cs.mean_auc;
      summary.auc.push_back(std::move(cs));
    }
    summary.average_auc = config.cardinalities.empty() ? 0.0 : total / static_cast<double>(config.cardinalities.size());
    summary.stability = stability_or_empty(summary.rankings, config.cardinalities, d.features());
    report.methods.push_back(std::move(summary));
  }

  // EC-FS against every other method, per cardinality.
  if (outcomes.size() >= 2) {
    for (const auto& lead : report.methods) {
      if (lead.method != Method::ecfs) continue;
      for (const auto& other : report.methods) {
        if (other.method == Method::ecfs) continue;
        for (std::size_t ki = 0; ki < config.cardinalities.size(); ++ki)
          report.t_tests.push_back({lead.method, other.method, config.cardinalities[ki],
                                    two_sample_ttest(lead.auc[ki].aucs, other.auc[ki].aucs)});
      }
    }
  }

  for (const auto& o : outcomes) report.selections.push_back(o.selection);
  return report;
}

StabilityReport run_stability(const Dataset& d, const EvalConfig& config,
                              const std::vector<std::size_t>& cardinalities) {
  if (config.plan.n_repeats < 2) throw std::invalid_argument("stability needs at least 2 repeats");
  for (auto k : cardinalities)
    if (k == 0 || k >= d.features())
      throw std::invalid_argument("stability cardinality " + std::to_string(k) + " must lie in [1, " +
                                  std::to_string(d.features() - 1) + "]");
  EvalConfig cfg = config;
  cfg.cardinalities.clear();
  const auto outcomes = run_repeats(d, cfg, false);

  StabilityReport report;
  report.features = d.features();
  report.cardinalities = cardinalities;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    std::vector<FeatureRanking> rankings;
    for (const auto& o : outcomes) rankings.push_back(o.methods[mi].ranking);
    report.curves.emplace_back(method_name(cfg.methods[mi]), stability_curve(rankings, cardinalities));
  }
  return report;
}

}  // namespace ecfs::eval
