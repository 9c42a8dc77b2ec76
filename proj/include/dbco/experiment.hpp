#pragma once

#include <string>
#include <vector>

#include "dbco/config.hpp"
#include "dbco/metrics.hpp"
#include "dbco/verify.hpp"

namespace dbco {

struct SeedOutcome {
  std::uint64_t seed = 0;
  MetricSeries series;
  double f1 = 0.0;
  double benchmark_objective = 0.0;
};

struct ExperimentResult {
  std::vector<SeedOutcome> per_seed;
  MetricSeries averaged;
  std::vector<std::string> files;  // written CSV paths
};

// Runs one seed end to end: agents, instance, schedule, trace, metrics.
// The instance's labels depend on x_{i,1}, so agents are initialized first
// (only delta(1) and xi(1) matter there, neither depends on F1) and the
// final schedule is rebuilt with the certified F1.
SeedOutcome run_single_seed(const ExperimentConfig& config, std::uint64_t seed);

// Full experiment: one CSV per seed plus a seed-averaged CSV under
// config.output_dir (or the DBCO_OUTPUT_DIR environment variable when the
// config leaves it empty). Set write_files = false to skip CSV emission.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool write_files = true);

// header: t,regret_static,regret_dynamic,ccv,avg_loss,avg_ccv,samples
// floating-point columns carry 17 significant digits.
void emit_csv(const MetricSeries& series, const std::string& path);
std::string render_csv(const MetricSeries& series);

MetricSeries average_series(const std::vector<SeedOutcome>& outcomes);

// Resolved schedule table at t in {1, 10, 100} for --validate-only.
std::string schedule_table(const ExperimentConfig& config);

// Estimator verification battery (affine and quadratic targets for
// p in {2,4,16}, sandwich checks, and trace-level dual/norm bounds on a
// short run). full = acceptance sample sizes (N = 1e6).
std::vector<VerificationReport> run_verification_battery(std::uint64_t seed,
                                                         bool full);

}  // namespace dbco
