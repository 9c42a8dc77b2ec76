#include "dbco/config.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace dbco {

namespace {

const std::set<std::string> kKnownKeys = {
    "version", "name", "n", "p", "T", "schedule", "graph", "estimator",
    "init", "metrics_cadence", "seeds", "lambda", "halfwidth", "f1_override",
    "threads", "compute_dynamic_regret", "validate_connectivity",
    "benchmark_max_iters", "benchmark_tol", "output_dir"};

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key()))
      throw std::invalid_argument("config: unknown key '" + it.key() + "' in " +
                                  where);
  }
}

}  // namespace

std::string ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["name"] = name;
  j["n"] = n;
  j["p"] = p;
  j["T"] = T;
  nlohmann::json sched;
  sched["variant"] = schedule_variant;
  if (schedule_variant == "theorem1") {
    sched["g1"] = g1;
    sched["g2"] = g2;
    sched["g3"] = g3;
  } else {
    sched["g"] = g;
  }
  j["schedule"] = sched;
  j["graph"] = {{"edge_prob", edge_prob},
                {"chain_augment", chain_augment},
                {"redraw_per_round", redraw_per_round}};
  j["estimator"] = estimator;
  j["init"] = init;
  j["metrics_cadence"] = metrics_cadence;
  j["seeds"] = seeds;
  j["lambda"] = lambda;
  j["halfwidth"] = halfwidth;
  j["f1_override"] = f1_override;
  j["threads"] = threads;
  j["compute_dynamic_regret"] = compute_dynamic_regret;
  j["validate_connectivity"] = validate_connectivity;
  j["benchmark_max_iters"] = benchmark_max_iters;
  j["benchmark_tol"] = benchmark_tol;
  j["output_dir"] = output_dir;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  reject_unknown(j, kKnownKeys, "root");
  if (j.at("version").get<int>() != 1)
    throw std::invalid_argument("config: unsupported version");
  ExperimentConfig c;
  c.name = j.value("name", c.name);
  c.n = j.at("n").get<int>();
  c.p = j.at("p").get<int>();
  c.T = j.at("T").get<int>();
  const auto& sched = j.at("schedule");
  reject_unknown(sched, {"variant", "g", "g1", "g2", "g3"}, "schedule");
  c.schedule_variant = sched.at("variant").get<std::string>();
  if (c.schedule_variant == "theorem1") {
    c.g1 = sched.at("g1").get<double>();
    c.g2 = sched.at("g2").get<double>();
    c.g3 = sched.at("g3").get<double>();
  } else {
    c.g = sched.at("g").get<double>();
  }
  const auto& graph = j.at("graph");
  reject_unknown(graph, {"edge_prob", "chain_augment", "redraw_per_round"},
                 "graph");
  c.edge_prob = graph.at("edge_prob").get<double>();
  c.chain_augment = graph.at("chain_augment").get<bool>();
  c.redraw_per_round = graph.at("redraw_per_round").get<bool>();
  c.estimator = j.at("estimator").get<std::string>();
  c.init = j.value("init", c.init);
  c.metrics_cadence = j.value("metrics_cadence", 0);
  c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  c.lambda = j.value("lambda", c.lambda);
  c.halfwidth = j.value("halfwidth", c.halfwidth);
  c.f1_override = j.value("f1_override", 0.0);
  c.threads = j.value("threads", 1);
  c.compute_dynamic_regret = j.value("compute_dynamic_regret", false);
  c.validate_connectivity = j.value("validate_connectivity", false);
  c.benchmark_max_iters = j.value("benchmark_max_iters", 20000L);
  c.benchmark_tol = j.value("benchmark_tol", 1e-3);
  c.output_dir = j.value("output_dir", c.output_dir);
  c.validate();
  return c;
}

void ExperimentConfig::validate() const {
  if (n < 2) throw std::invalid_argument("config: n >= 2 required");
  if (p < 1) throw std::invalid_argument("config: p >= 1 required");
  if (T < 2) throw std::invalid_argument("config: T >= 2 required");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("config: edge_prob in [0,1] required");
  if (estimator != "one_point" && estimator != "two_point")
    throw std::invalid_argument("config: estimator must be one_point or two_point");
  if (init != "origin" && init != "random")
    throw std::invalid_argument("config: init must be origin or random");
  if (metrics_cadence < 0)
    throw std::invalid_argument("config: metrics_cadence >= 0 required");
  if (seeds.empty()) throw std::invalid_argument("config: at least one seed");
  if (!(lambda >= 0.0)) throw std::invalid_argument("config: lambda >= 0 required");
  if (!(halfwidth > 0.0)) throw std::invalid_argument("config: halfwidth > 0 required");
  if (threads < 1) throw std::invalid_argument("config: threads >= 1 required");
  if (benchmark_max_iters < 1)
    throw std::invalid_argument("config: benchmark_max_iters >= 1 required");
  // exponent intervals are checked by the schedule factory
  (void)make_schedule(1.0);
}

ParameterSchedule ExperimentConfig::make_schedule(double F1) const {
  double r = halfwidth;  // inner radius of the symmetric box
  if (schedule_variant == "theorem1")
    return make_theorem1_schedule(g1, g2, g3, r, p, F1);
  if (schedule_variant == "corollary1")
    return make_corollary1_schedule(g, r, p, F1);
  if (schedule_variant == "corollary2")
    return make_corollary2_schedule(g, r, p, F1);
  throw std::invalid_argument("config: unknown schedule variant '" +
                              schedule_variant + "'");
}

EstimatorMode ExperimentConfig::estimator_mode() const {
  return estimator == "two_point" ? EstimatorMode::TwoPoint
                                  : EstimatorMode::OnePoint;
}

InitMode ExperimentConfig::init_mode() const {
  return init == "random" ? InitMode::RandomInShrunkSet : InitMode::Origin;
}

int ExperimentConfig::effective_cadence() const {
  return metrics_cadence > 0 ? metrics_cadence : (n <= 20 ? 1 : 10);
}

std::vector<ExperimentConfig> make_preset(const std::string& name) {
  ExperimentConfig base;
  base.name = name;
  if (name == "fig1-desk") {
    base.n = 10;
    base.p = 4;
    base.T = 10000;
    base.schedule_variant = "corollary1";
    base.g = 0.1;
    ExperimentConfig two = base;
    base.estimator = "one_point";
    two.estimator = "two_point";
    base.name = "fig1-desk-one-point";
    two.name = "fig1-desk-two-point";
    return {base, two};
  }
  if (name == "fig2-desk" || name == "fig3-desk") {
    base.n = 10;
    base.p = 4;
    base.T = 10000;
    base.schedule_variant = "corollary1";
    base.g = 0.1;
    return {base};
  }
  if (name == "full") {
    // full-scale parameters of the ridge experiment; not part of CI
    base.n = 100;
    base.p = 16;
    base.T = 10000;
    base.schedule_variant = "corollary1";
    base.g = 0.1;
    base.metrics_cadence = 10;
    return {base};
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"fig1-desk", "fig2-desk", "fig3-desk", "full"};
}

}  // namespace dbco
