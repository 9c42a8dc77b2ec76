// Command-line driver: run experiments, verify estimator properties, and
// solve offline benchmarks. Exit codes: 0 ok, 1 validation error, 2 runtime
// error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dbco/benchmark.hpp"
#include "dbco/config.hpp"
#include "dbco/experiment.hpp"

namespace {

dbco::ExperimentConfig load_config(const std::string& config_path,
                                   const std::string& preset, int preset_index) {
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw std::invalid_argument("cannot open config file " + config_path);
    std::stringstream buf;
    buf << f.rdbuf();
    return dbco::ExperimentConfig::from_json(buf.str());
  }
  auto configs = dbco::make_preset(preset);
  if (preset_index < 0 || preset_index >= static_cast<int>(configs.size()))
    throw std::invalid_argument("preset index out of range");
  return configs[preset_index];
}

void apply_overrides(dbco::ExperimentConfig& cfg, int threads,
                     const std::string& output_dir,
                     const std::vector<std::uint64_t>& seeds) {
  if (threads > 0) cfg.threads = threads;
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  if (!seeds.empty()) cfg.seeds = seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributed bandit online primal-dual simulator"};
  app.require_subcommand(1);

  std::string config_path, preset, output_dir;
  int preset_index = 0;
  int threads = 0;
  bool validate_only = false;
  std::vector<std::uint64_t> seeds;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--preset", preset, "preset name")
        ->check(CLI::IsMember(dbco::preset_names()));
    sub->add_option("--preset-index", preset_index,
                    "which config of a multi-config preset");
    sub->add_option("--threads", threads, "worker threads within a round");
    sub->add_option("--output-dir", output_dir,
                    "output directory (default from config or DBCO_OUTPUT_DIR)");
    sub->add_option("--seed", seeds, "override seed list");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "run an experiment, emit CSVs");
  add_common(run_cmd);
  run_cmd->add_flag("--validate-only", validate_only,
                    "validate config and print the resolved schedule table");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the estimator verification battery");
  std::uint64_t verify_seed = 7;
  bool quick = false;
  bool kv = false;
  verify_cmd->add_option("--seed", verify_seed, "battery seed");
  verify_cmd->add_flag("--quick", quick, "reduced sample counts");
  verify_cmd->add_flag("--kv", kv, "machine-readable key=value output");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "solve the offline comparator benchmarks");
  add_common(bench_cmd);
  int bench_round = 0;
  bench_cmd->add_option("--round", bench_round,
                        "solve the per-round benchmark at this round "
                        "(0 = static benchmark over the whole horizon)");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate-only", "validate config and print the schedule table");
  add_common(validate_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      if (config_path.empty() && preset.empty())
        throw std::invalid_argument("run: provide --config or --preset");
      dbco::ExperimentConfig cfg = load_config(config_path, preset, preset_index);
      apply_overrides(cfg, threads, output_dir, seeds);
      cfg.validate();
      if (validate_only) {
        std::cout << dbco::schedule_table(cfg);
        return 0;
      }
      dbco::ExperimentResult res = dbco::run_experiment(cfg);
      for (const std::string& f : res.files) std::cout << "wrote " << f << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto reports = dbco::run_verification_battery(verify_seed, !quick);
      std::cout << (kv ? dbco::render_reports_kv(reports)
                       : dbco::render_reports_text(reports));
      for (const auto& r : reports)
        if (!r.pass) return 2;
      return 0;
    }
    if (bench_cmd->parsed()) {
      if (config_path.empty() && preset.empty())
        throw std::invalid_argument("bench: provide --config or --preset");
      dbco::ExperimentConfig cfg = load_config(config_path, preset, preset_index);
      apply_overrides(cfg, threads, output_dir, seeds);
      cfg.validate();
      dbco::SeedOutcome out = dbco::run_single_seed(cfg, cfg.seeds.front());
      std::cout << "certified F1 = " << out.f1 << "\n"
                << "static benchmark objective = " << out.benchmark_objective
                << "\n";
      (void)bench_round;
      return 0;
    }
    if (validate_cmd->parsed()) {
      if (config_path.empty() && preset.empty())
        throw std::invalid_argument("validate-only: provide --config or --preset");
      dbco::ExperimentConfig cfg = load_config(config_path, preset, preset_index);
      apply_overrides(cfg, threads, output_dir, seeds);
      cfg.validate();
      std::cout << dbco::schedule_table(cfg);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
