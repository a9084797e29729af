#include "ecfs/eval/report.hpp"

#include <iomanip>
#include <ostream>

namespace ecfs::eval {
namespace {

Json config_json(const EvalConfig& c) {
  Json j;
  j["train_fraction"] = c.plan.train_fraction;
  j["repeats"] = c.plan.n_repeats;
  j["seed"] = c.plan.seed;
  j["stratified"] = c.plan.stratified;
  Json methods = Json::array();
  for (auto m : c.methods) methods.push_back(method_name(m));
  j["methods"] = methods;
  j["cardinalities"] = c.cardinalities;
  if (c.alpha) {
    j["alpha"] = *c.alpha;
    j["C"] = c.c;
  } else {
    j["alpha"] = "cv";
    j["alpha_grid"] = c.cv.alpha_grid;
    j["C_grid"] = c.cv.c_grid;
    j["folds"] = c.cv.folds;
    j["cv_cardinality"] = c.cv.cardinality;
  }
  j["bins"] = c.bins;
  j["epochs"] = c.epochs;
  j["tol"] = c.power.tol;
  j["max_iter"] = c.power.max_iter;
  return j;
}

Json stability_json(const std::vector<StabilityPoint>& curve) {
  Json arr = Json::array();
  for (const auto& p : curve) arr.push_back({{"cardinality", p.cardinality}, {"kuncheva", p.kuncheva}});
  return arr;
}

}  // namespace

Json to_json(const EvalReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "evaluate";
  j["dataset"] = {{"samples", r.samples}, {"features", r.features}, {"classes", r.class_names.size()},
                  {"class_labels", r.class_names}};
  j["config"] = config_json(r.config);

  Json methods = Json::array();
  for (const auto& m : r.methods) {
    Json mj;
    mj["name"] = method_name(m.method);
    Json auc = Json::array();
    for (const auto& c : m.auc)
      auc.push_back({{"cardinality", c.cardinality}, {"mean", c.mean_auc}, {"sd", c.sd_auc}, {"samples", c.aucs}});
    mj["auc"] = auc;
    mj["average"] = m.average_auc;
    mj["stability"] = stability_json(m.stability);
    if (r.config.timing) mj["ranking_seconds"] = m.ranking_seconds;
    methods.push_back(mj);
  }
  j["methods"] = methods;

  Json tests = Json::array();
  for (const auto& t : r.t_tests)
    tests.push_back({{"method", method_name(t.method)},
                     {"baseline", method_name(t.baseline)},
                     {"cardinality", t.cardinality},
                     {"t", t.result.t},
                     {"df", t.result.df},
                     {"p", t.result.p}});
  j["t_tests"] = tests;

  Json sel = Json::array();
  for (const auto& s : r.selections) {
    Json sj{{"repeat", s.repeat}, {"alpha", s.alpha}, {"C", s.c}};
    if (s.cv_auc) sj["cv_auc"] = *s.cv_auc;
    sel.push_back(sj);
  }
  j["selection"] = sel;
  return j;
}

Json to_json(const StabilityReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "stability";
  j["features"] = r.features;
  j["cardinalities"] = r.cardinalities;
  Json curves = Json::array();
  for (const auto& [name, curve] : r.curves) curves.push_back({{"method", name}, {"curve", stability_json(curve)}});
  j["methods"] = curves;
  return j;
}

void write_csv(const EvalReport& r, std::ostream& out) {
  out << "method";
  for (auto k : r.config.cardinalities) out << ',' << k;
  out << ",average\n" << std::fixed << std::setprecision(2);
  for (const auto& m : r.methods) {
    out << method_name(m.method);
    for (const auto& c : m.auc) out << ',' << 100.0 * c.mean_auc;
    out << ',' << 100.0 * m.average_auc << '\n';
  }
  out << std::defaultfloat;
}

void write_csv(const StabilityReport& r, std::ostream& out) {
  out << "cardinality";
  for (const auto& [name, curve] : r.curves) out << ',' << name;
  out << '\n' << std::setprecision(6);
  for (std::size_t i = 0; i < r.cardinalities.size(); ++i) {
    out << r.cardinalities[i];
    for (const auto& [name, curve] : r.curves) out << ',' << curve[i].kuncheva;
    out << '\n';
  }
}

}  // namespace ecfs::eval
