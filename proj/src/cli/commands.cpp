#include "ecfs/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecfs/baselines.hpp"
#include "ecfs/centrality.hpp"
#include "ecfs/eval/cross_validation.hpp"
#include "ecfs/eval/protocol.hpp"
#include "ecfs/eval/report.hpp"
#include "ecfs/io.hpp"
#include "ecfs/synthetic.hpp"

namespace ecfs::cli {
namespace {

using Json = nlohmann::ordered_json;

std::optional<double> parse_alpha(const std::string& s) {
  if (s == "cv") return std::nullopt;
  return std::stod(s);
}

bool is_cv(const RunConfig& cfg) { return cfg.alpha == "cv"; }

std::vector<std::size_t> default_cardinalities(Command c) {
  if (c == Command::stability) {
    std::vector<std::size_t> ks;
    for (std::size_t k = 10; k <= 200; k += 10) ks.push_back(k);
    return ks;
  }
  return {50, 100, 150, 200};
}

Dataset load(const RunConfig& cfg) {
  LoadOptions opts;
  opts.format = cfg.format == "matrix" ? DatasetFormat::labelled_matrix : DatasetFormat::csv_with_header;
  opts.label_column = cfg.label_col;
  opts.labels_path = cfg.labels_path;
  return load_dataset(cfg.data_path, opts);
}

eval::EvalConfig eval_config(const RunConfig& cfg) {
  eval::EvalConfig e;
  e.plan = {cfg.train_fraction, cfg.repeats, cfg.seed, cfg.stratified};
  e.methods.clear();
  for (const auto& m : cfg.methods) e.methods.push_back(*eval::parse_method(m));
  e.alpha = parse_alpha(cfg.alpha);
  e.c = cfg.c;
  e.cv.alpha_grid = cfg.alpha_grid;
  e.cv.c_grid = cfg.c_grid;
  e.cv.folds = cfg.folds;
  e.cv.cardinality = static_cast<std::size_t>(cfg.cv_cardinality);
  e.bins = cfg.bins;
  e.epochs = cfg.epochs;
  e.power = {cfg.tol, cfg.max_iter};
  e.workers = cfg.workers;
  e.timing = cfg.timing;
  if (cfg.cardinalities.empty()) {
    e.cardinalities = default_cardinalities(cfg.command);
  } else {
    e.cardinalities.assign(cfg.cardinalities.begin(), cfg.cardinalities.end());
  }
  return e;
}

Json dataset_json(const Dataset& d) {
  return {{"samples", d.samples()}, {"features", d.features()}, {"classes", d.num_classes()},
          {"class_labels", d.class_names()}};
}

template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& write) {
  if (cfg.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + cfg.out_path);
  write(file);
}

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const Dataset d = load(cfg);
  const PowerOptions power{cfg.tol, cfg.max_iter};
  const int bins = cfg.bins > 0 ? cfg.bins : default_bins(d.samples());

  Json meta;
  meta["schema_version"] = eval::kSchemaVersion;
  meta["command"] = "rank";
  meta["method"] = cfg.method;
  meta["dataset"] = dataset_json(d);
  meta["bins"] = bins;

  FeatureRanking ranking;
  if (cfg.method == "ecfs") {
    double alpha = 0.0;
    if (is_cv(cfg)) {
      eval::CvConfig cv;
      cv.alpha_grid = cfg.alpha_grid;
      cv.c_grid = cfg.c_grid;
      cv.folds = cfg.folds;
      cv.cardinality = static_cast<std::size_t>(cfg.cv_cardinality);
      cv.seed = cfg.seed;
      cv.epochs = cfg.epochs;
      cv.bins = cfg.bins;
      cv.power = power;
      const auto chosen = eval::cross_validate(d, cv);
      alpha = chosen.alpha;
      meta["cv"] = {{"alpha", chosen.alpha}, {"C", chosen.c}, {"mean_auc", chosen.best_auc},
                    {"folds", cfg.folds}, {"cardinality", cfg.cv_cardinality}};
    } else {
      alpha = std::stod(cfg.alpha);
    }
    const auto result = ecfs_rank_detailed(d, {alpha, bins, power});
    meta["alpha"] = alpha;
    meta["eigen"] = {{"lambda0", result.eigen.lambda0},
                     {"iterations", result.eigen.iterations},
                     {"residual", result.eigen.residual},
                     {"degenerate", result.eigen.degenerate}};
    ranking = result.ranking;
  } else if (cfg.method == "fisher") {
    ranking = rank_by_fisher(d);
  } else {
    ranking = rank_by_mi(d, bins);
  }

  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.output_format == "csv") {
      os << "rank,index,name,score\n" << std::setprecision(17);
      for (std::size_t i = 0; i < ranking.size(); ++i)
        os << i + 1 << ',' << ranking.order[i] << ',' << d.feature_name(ranking.order[i]) << ','
           << ranking.scores[i] << '\n';
      return;
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < ranking.size(); ++i)
      rows.push_back({{"rank", i + 1},
                      {"index", ranking.order[i]},
                      {"name", d.feature_name(ranking.order[i])},
                      {"score", ranking.scores[i]}});
    meta["ranking"] = rows;
    os << meta.dump(2) << '\n';
  });
  return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
  const Dataset d = load(cfg);
  const auto report = eval::run_evaluation(d, eval_config(cfg));
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.output_format == "csv")
      eval::write_csv(report, os);
    else
      os << eval::to_json(report).dump(2) << '\n';
  });
  return kExitOk;
}

FeatureRanking read_ranking_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ranking file: " + path);
  const auto j = Json::parse(in);
  FeatureRanking r;
  for (const auto& row : j.at("ranking")) {
    r.order.push_back(row.at("index").get<std::size_t>());
    r.scores.push_back(row.contains("score") ? row.at("score").get<double>() : 0.0);
  }
  return r;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
  eval::StabilityReport report;
  const bool explicit_ks = !cfg.cardinalities.empty();
  std::vector<std::size_t> ks(cfg.cardinalities.begin(), cfg.cardinalities.end());

  auto fit_default = [&](std::size_t n) {
    if (explicit_ks) return;
    ks.clear();
    for (auto k : default_cardinalities(Command::stability))
      if (k < n) ks.push_back(k);
    if (ks.empty() && n > 1) ks.push_back(n / 2);
  };

  if (!cfg.ranking_files.empty()) {
    std::vector<FeatureRanking> rankings;
    for (const auto& f : cfg.ranking_files) rankings.push_back(read_ranking_file(f));
    fit_default(rankings.front().size());
    report.features = rankings.front().size();
    report.cardinalities = ks;
    report.curves.emplace_back("input", eval::stability_curve(rankings, ks));
  } else {
    const Dataset d = load(cfg);
    fit_default(d.features());
    report = eval::run_stability(d, eval_config(cfg), ks);
  }

  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.output_format == "csv")
      eval::write_csv(report, os);
    else
      os << eval::to_json(report).dump(2) << '\n';
  });
  return kExitOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
  SyntheticSpec spec;
  spec.n_samples = static_cast<std::size_t>(cfg.samples);
  spec.n_features = static_cast<std::size_t>(cfg.features);
  spec.n_informative = static_cast<std::size_t>(cfg.informative);
  spec.class_separation = cfg.separation;
  spec.noise_sd = cfg.noise;
  spec.seed = cfg.seed;
  const auto synth = generate_synthetic(spec);

  const std::string prefix = cfg.out_path.empty() ? "synthetic" : cfg.out_path;
  {
    std::ofstream csv(prefix + ".csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + prefix + ".csv");
    write_csv(synth.data, csv);
  }
  {
    std::ofstream idx(prefix + ".informative.txt", std::ios::binary);
    if (!idx) throw std::runtime_error("cannot write " + prefix + ".informative.txt");
    for (auto i : synth.informative) idx << i << '\n';
  }
  out << "wrote " << prefix << ".csv and " << prefix << ".informative.txt\n";
  return kExitOk;
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ECFS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

std::vector<std::string> validate(const RunConfig& cfg) {
  std::vector<std::string> errs;
  const bool needs_data = cfg.command != Command::synth &&
                          !(cfg.command == Command::stability && !cfg.ranking_files.empty());
  if (needs_data) {
    if (cfg.data_path.empty()) errs.push_back("--data is required");
    if (cfg.format != "csv" && cfg.format != "matrix") errs.push_back("--format must be csv or matrix");
    if (cfg.format == "matrix" && cfg.labels_path.empty()) errs.push_back("--format matrix requires --labels");
  }
  if (cfg.output_format != "json" && cfg.output_format != "csv")
    errs.push_back("--output-format must be json or csv");

  if (cfg.alpha != "cv") {
    try {
      std::size_t used = 0;
      const double a = std::stod(cfg.alpha, &used);
      if (used != cfg.alpha.size() || !(a >= 0.0 && a <= 1.0))
        errs.push_back("--alpha must be a number in [0, 1] or 'cv' (got " + cfg.alpha + ")");
    } catch (const std::exception&) {
      errs.push_back("--alpha must be a number in [0, 1] or 'cv' (got " + cfg.alpha + ")");
    }
  }
  if (cfg.method != "ecfs" && cfg.method != "fisher" && cfg.method != "mi")
    errs.push_back("--method must be ecfs, fisher or mi");
  if (cfg.methods.empty()) errs.push_back("--methods must name at least one method");
  for (const auto& m : cfg.methods)
    if (!eval::parse_method(m)) errs.push_back("unknown method '" + m + "'");
  if (cfg.bins != 0 && cfg.bins < 2) errs.push_back("--bins must be at least 2");
  if (!(cfg.tol > 0.0)) errs.push_back("--tol must be positive");
  if (cfg.max_iter < 1) errs.push_back("--max-iter must be positive");
  if (!(cfg.c > 0.0)) errs.push_back("--C must be positive");
  if (cfg.alpha_grid.empty()) errs.push_back("--alpha-grid must not be empty");
  for (double a : cfg.alpha_grid)
    if (!(a >= 0.0 && a <= 1.0)) errs.push_back("--alpha-grid values must lie in [0, 1]");
  if (cfg.c_grid.empty()) errs.push_back("--C-grid must not be empty");
  for (double c : cfg.c_grid)
    if (!(c > 0.0)) errs.push_back("--C-grid values must be positive");
  if (cfg.folds < 2) errs.push_back("--folds must be at least 2");
  if (cfg.cv_cardinality < 1) errs.push_back("--cv-cardinality must be positive");
  if (cfg.epochs < 1) errs.push_back("--epochs must be positive");
  for (int k : cfg.cardinalities)
    if (k < 1) errs.push_back("--cardinalities values must be positive");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0))
    errs.push_back("--train-fraction must lie in (0, 1)");
  if (cfg.repeats < 1) errs.push_back("--repeats must be positive");
  if (cfg.command == Command::stability && cfg.ranking_files.empty() && cfg.repeats < 2)
    errs.push_back("stability needs --repeats of at least 2");
  if (cfg.command == Command::stability && cfg.ranking_files.size() == 1)
    errs.push_back("--rankings needs at least 2 files");
  if (cfg.workers < 1) errs.push_back("--workers must be positive");

  if (cfg.command == Command::synth) {
    if (cfg.samples < 2) errs.push_back("--samples must be at least 2");
    if (cfg.features < 1) errs.push_back("--features must be positive");
    if (cfg.informative < 1) errs.push_back("--informative must be at least 1");
    if (cfg.informative > cfg.features) errs.push_back("--informative exceeds --features");
    if (!(cfg.separation > 0.0)) errs.push_back("--separation must be positive");
    if (!(cfg.noise > 0.0)) errs.push_back("--noise must be positive");
  }
  return errs;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const auto errs = validate(cfg); !errs.empty()) {
    err << "invalid arguments:";
    for (const auto& e : errs) err << "\n  - " << e;
    err << '\n';
    return kExitError;
  }
  try {
    switch (cfg.command) {
      case Command::rank: return cmd_rank(cfg, out);
      case Command::evaluate: return cmd_evaluate(cfg, out);
      case Command::stability: return cmd_stability(cfg, out);
      case Command::synth: return cmd_synth(cfg, out);
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feature ranking by eigenvector centrality"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = default_seed();

  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", cfg.data_path, "Dataset file");
    sub->add_option("--format", cfg.format, "csv (with header) or matrix (whitespace matrix + --labels)");
    sub->add_option("--labels", cfg.labels_path, "Label file for --format matrix, one label per line");
    sub->add_option("--label-col", cfg.label_col, "Label column name or 0-based index (default: last)");
    sub->add_option("--bins", cfg.bins, "Histogram bins for mutual information (default: max(2, floor(sqrt(T))))");
    sub->add_option("--tol", cfg.tol, "Power-iteration residual tolerance");
    sub->add_option("--max-iter", cfg.max_iter, "Power-iteration iteration cap");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Master seed (default: $ECFS_SEED or 0)");
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    sub->add_option("--output-format", cfg.output_format, "json or csv");
  };
  auto add_cv = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Loading coefficient in [0, 1], or 'cv'");
    sub->add_option("--alpha-grid", cfg.alpha_grid, "Alpha values tried by cross-validation")->delimiter(',');
    sub->add_option("--C-grid", cfg.c_grid, "Classifier C values tried by cross-validation")->delimiter(',');
    sub->add_option("--folds", cfg.folds, "Cross-validation folds");
    sub->add_option("--cv-cardinality", cfg.cv_cardinality, "Features kept while cross-validating");
    sub->add_option("--epochs", cfg.epochs, "Classifier training epochs");
  };
  auto add_protocol = [&](CLI::App* sub) {
    sub->add_option("--cardinalities", cfg.cardinalities, "Numbers of top features to evaluate")->delimiter(',');
    sub->add_option("--train-fraction", cfg.train_fraction, "Training share of every split");
    sub->add_option("--repeats", cfg.repeats, "Number of random splits");
    sub->add_flag_callback("--no-stratify", [&cfg] { cfg.stratified = false; }, "Plain random splits");
    sub->add_option("--methods", cfg.methods, "Rankers: ecfs, fisher, mi")->delimiter(',');
    sub->add_option("--workers", cfg.workers, "Threads used for repeats");
  };

  auto* rank = app.add_subcommand("rank", "Rank the features of a dataset");
  add_data(rank);
  add_common(rank);
  add_cv(rank);
  rank->add_option("--method", cfg.method, "ecfs, fisher or mi");

  auto* evaluate = app.add_subcommand("evaluate", "Repeated-split AUC evaluation");
  add_data(evaluate);
  add_common(evaluate);
  add_cv(evaluate);
  add_protocol(evaluate);
  evaluate->add_option("--C", cfg.c, "Classifier C when alpha is fixed");
  evaluate->add_flag("--timing", cfg.timing, "Include ranking wall time (makes output run-dependent)");

  auto* stability = app.add_subcommand("stability", "Kuncheva stability over repeated splits");
  add_data(stability);
  add_common(stability);
  add_cv(stability);
  add_protocol(stability);
  stability->add_option("--rankings", cfg.ranking_files, "Ranking JSON files to compare instead of a dataset");

  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset and its informative columns");
  synth->add_option("--samples", cfg.samples);
  synth->add_option("--features", cfg.features);
  synth->add_option("--informative", cfg.informative);
  synth->add_option("--separation", cfg.separation);
  synth->add_option("--noise", cfg.noise);
  synth->add_option("--seed", cfg.seed, "Generator seed (default: $ECFS_SEED or 0)");
  synth->add_option("--out", cfg.out_path, "Output prefix (default: synthetic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (rank->parsed()) cfg.command = Command::rank;
  else if (evaluate->parsed()) cfg.command = Command::evaluate;
  else if (stability->parsed()) cfg.command = Command::stability;
  else cfg.command = Command::synth;
  return execute(cfg, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("ecfs");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ecfs::cli
