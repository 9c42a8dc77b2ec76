#include <doctest.h>

#include "dbco/config.hpp"

using namespace dbco;

TEST_SUITE_BEGIN("config");

TEST_CASE("config round-trips through JSON") {
  ExperimentConfig c;
  c.name = "roundtrip";
  c.n = 7;
  c.p = 3;
  c.T = 500;
  c.schedule_variant = "corollary2";
  c.g = 0.2;
  c.edge_prob = 0.35;
  c.redraw_per_round = true;
  c.estimator = "two_point";
  c.init = "random";
  c.metrics_cadence = 5;
  c.seeds = {3, 4, 5};
  c.lambda = 1e-2;
  c.threads = 2;
  c.compute_dynamic_regret = true;
  c.benchmark_max_iters = 1234;
  c.output_dir = "elsewhere";
  ExperimentConfig back = ExperimentConfig::from_json(c.to_json());
  CHECK(back == c);

  ExperimentConfig t1;
  t1.schedule_variant = "theorem1";
  t1.g1 = 0.5;
  t1.g2 = 0.1;
  t1.g3 = 0.12;
  CHECK(ExperimentConfig::from_json(t1.to_json()) == t1);
}

TEST_CASE("unknown keys are rejected") {
  ExperimentConfig c;
  std::string good = c.to_json();
  std::string bad = good;
  bad.insert(bad.rfind('}'), ",\"alpha_exponent\": 0.5");
  CHECK_THROWS_AS((void)ExperimentConfig::from_json(bad), std::invalid_argument);

  std::string bad_sched = good;
  auto pos = bad_sched.find("\"variant\"");
  bad_sched.insert(pos, "\"gg\": 0.1, ");
  CHECK_THROWS_AS((void)ExperimentConfig::from_json(bad_sched),
                  std::invalid_argument);
}

TEST_CASE("version and field validation") {
  ExperimentConfig c;
  std::string v2 = c.to_json();
  v2.replace(v2.find("\"version\": 1"), 12, "\"version\": 2");
  CHECK_THROWS_AS((void)ExperimentConfig::from_json(v2), std::invalid_argument);

  ExperimentConfig bad = c;
  bad.estimator = "three_point";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.n = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.g = 0.9;  // schedule factory rejects it
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.seeds.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("presets") {
  auto fig1 = make_preset("fig1-desk");
  REQUIRE(fig1.size() == 2);
  CHECK(fig1[0].estimator == "one_point");
  CHECK(fig1[1].estimator == "two_point");
  CHECK(fig1[0].n == 10);
  CHECK(fig1[0].p == 4);
  CHECK(fig1[0].T == 10000);
  CHECK(fig1[0].schedule_variant == "corollary1");
  for (const auto& cfg : fig1) CHECK_NOTHROW(cfg.validate());

  auto full = make_preset("full");
  REQUIRE(full.size() == 1);
  CHECK(full[0].n == 100);
  CHECK(full[0].p == 16);
  CHECK(full[0].effective_cadence() == 10);

  CHECK_THROWS_AS((void)make_preset("fig9"), std::invalid_argument);
  CHECK(preset_names().size() == 4);
}

TEST_CASE("mode accessors") {
  ExperimentConfig c;
  CHECK(c.estimator_mode() == EstimatorMode::OnePoint);
  CHECK(c.init_mode() == InitMode::Origin);
  c.estimator = "two_point";
  c.init = "random";
  CHECK(c.estimator_mode() == EstimatorMode::TwoPoint);
  CHECK(c.init_mode() == InitMode::RandomInShrunkSet);
  c.metrics_cadence = 0;
  c.n = 50;
  CHECK(c.effective_cadence() == 10);
  c.metrics_cadence = 3;
  CHECK(c.effective_cadence() == 3);
}

TEST_SUITE_END();
