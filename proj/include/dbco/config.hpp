#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbco/algorithm.hpp"
#include "dbco/schedule.hpp"

namespace dbco {

// Experiment configuration; the JSON schema is fixed and versioned, and
// unknown keys are rejected so misspelled exponents cannot pass silently.
struct ExperimentConfig {
  std::string name = "experiment";
  int n = 10;
  int p = 4;
  int T = 10000;

  std::string schedule_variant = "corollary1";  // theorem1|corollary1|corollary2
  double g = 0.1;                               // corollary1/corollary2
  double g1 = 0.0, g2 = 0.0, g3 = 0.0;          // theorem1

  double edge_prob = 0.1;
  bool chain_augment = true;
  bool redraw_per_round = false;

  std::string estimator = "one_point";  // one_point|two_point
  std::string init = "origin";          // origin|random

  int metrics_cadence = 0;  // 0 = auto (1 for n <= 20, else 10)
  std::vector<std::uint64_t> seeds = {1};

  double lambda = 5e-6;
  double halfwidth = 2.0;
  double f1_override = 0.0;  // 0 = use the certified bound

  int threads = 1;
  bool compute_dynamic_regret = false;
  bool validate_connectivity = false;
  long benchmark_max_iters = 20000;
  double benchmark_tol = 1e-3;
  std::string output_dir = "out";

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  ParameterSchedule make_schedule(double F1) const;
  EstimatorMode estimator_mode() const;
  InitMode init_mode() const;
  int effective_cadence() const;

  bool operator==(const ExperimentConfig&) const = default;
};

// Desk-scale presets reproducing the ridge experiment. fig1-desk expands to
// two configs (one per estimator mode).
std::vector<ExperimentConfig> make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace dbco
