#include "dbco/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dbco/benchmark.hpp"

namespace dbco {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

GraphSequence build_graph_sequence(const ExperimentConfig& c, std::uint64_t seed) {
  if (c.redraw_per_round)
    return GraphSequence::redrawn(c.n, c.edge_prob, c.chain_augment, seed);
  Substream rng(seed, StreamPurpose::GraphEdges, 0, 0);
  return GraphSequence::single(
      build_random_graph(c.n, c.edge_prob, rng, c.chain_augment));
}

}  // namespace

SeedOutcome run_single_seed(const ExperimentConfig& config, std::uint64_t seed) {
  config.validate();

  // Provisional schedule (F1 = 1) fixes delta(1)/xi(1) for initialization.
  ParameterSchedule provisional = config.make_schedule(1.0);
  std::vector<int> dims(config.n, 2);
  FeasibleSet set = FeasibleSet::symmetric_box(config.p, config.halfwidth);
  std::vector<AgentState> initial = init_agents(
      config.n, set, provisional, dims, seed, config.init_mode());
  std::vector<Vec> x_init;
  x_init.reserve(initial.size());
  for (const AgentState& s : initial) x_init.push_back(s.x);

  RidgeProblem problem(config.n, config.p, config.T, config.lambda, seed,
                       std::move(x_init), config.halfwidth);
  double f1 = config.f1_override > 0.0 ? config.f1_override : problem.f1();
  ParameterSchedule sched = config.make_schedule(f1);

  GraphSequence graphs = build_graph_sequence(config, seed);
  if (config.validate_connectivity) {
    std::vector<GraphRound> seq;
    int window = config.redraw_per_round ? std::min(config.T, 64) : 1;
    for (int t = 1; t <= window; ++t) seq.push_back(graphs.graph(t));
    if (!validate_joint_connectivity(seq, config.redraw_per_round ? 8 : 1))
      throw std::runtime_error("graph sequence failed joint-connectivity check");
  }

  RunOptions ropts;
  ropts.seed = seed;
  ropts.mode = config.estimator_mode();
  ropts.init = config.init_mode();
  ropts.threads = config.threads;
  RoundTrace trace = run(problem, graphs, sched, config.T, ropts);

  BenchmarkOptions bopts;
  bopts.max_iters = config.benchmark_max_iters;
  BenchmarkResult st = static_benchmark(problem, config.benchmark_tol, bopts);

  std::vector<Vec> dyn;
  const std::vector<Vec>* dyn_ptr = nullptr;
  if (config.compute_dynamic_regret) {
    BenchmarkOptions dopts = bopts;
    dopts.max_iters = std::min<long>(bopts.max_iters, 4000);
    dyn.reserve(config.T);
    for (int t = 1; t <= config.T; ++t)
      dyn.push_back(dynamic_benchmark(problem, t, config.benchmark_tol, dopts).x);
    dyn_ptr = &dyn;
  }

  SeedOutcome out;
  out.seed = seed;
  out.f1 = f1;
  out.benchmark_objective = st.objective;
  out.series = compute_metric_series(trace, problem, st.x, dyn_ptr,
                                     config.effective_cadence());
  return out;
}

MetricSeries average_series(const std::vector<SeedOutcome>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("average_series: empty");
  MetricSeries avg = outcomes.front().series;
  std::size_t rows = avg.rounds.size();
  for (std::size_t s = 1; s < outcomes.size(); ++s) {
    const MetricSeries& m = outcomes[s].series;
    if (m.rounds != avg.rounds)
      throw std::invalid_argument("average_series: mismatched rounds");
    for (std::size_t r = 0; r < rows; ++r) {
      avg.regret_static[r] += m.regret_static[r];
      avg.regret_dynamic[r] += m.regret_dynamic[r];
      avg.ccv[r] += m.ccv[r];
      avg.avg_loss[r] += m.avg_loss[r];
      avg.avg_ccv[r] += m.avg_ccv[r];
      if (m.samples[r] != avg.samples[r])
        throw std::invalid_argument("average_series: sample counts differ");
    }
  }
  double inv = 1.0 / static_cast<double>(outcomes.size());
  for (std::size_t r = 0; r < rows; ++r) {
    avg.regret_static[r] *= inv;
    avg.regret_dynamic[r] *= inv;
    avg.ccv[r] *= inv;
    avg.avg_loss[r] *= inv;
    avg.avg_ccv[r] *= inv;
  }
  return avg;
}

std::string render_csv(const MetricSeries& s) {
  std::ostringstream os;
  os << "t,regret_static,regret_dynamic,ccv,avg_loss,avg_ccv,samples\n";
  for (std::size_t r = 0; r < s.rounds.size(); ++r) {
    os << s.rounds[r] << "," << fmt17(s.regret_static[r]) << ","
       << fmt17(s.regret_dynamic[r]) << "," << fmt17(s.ccv[r]) << ","
       << fmt17(s.avg_loss[r]) << "," << fmt17(s.avg_ccv[r]) << ","
       << s.samples[r] << "\n";
  }
  return os.str();
}

void emit_csv(const MetricSeries& series, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("emit_csv: cannot open " + path);
  f << render_csv(series);
  if (!f) throw std::runtime_error("emit_csv: write failed for " + path);
}

ExperimentResult run_experiment(const ExperimentConfig& config, bool write_files) {
  config.validate();
  ExperimentResult result;
  for (std::uint64_t seed : config.seeds)
    result.per_seed.push_back(run_single_seed(config, seed));
  result.averaged = average_series(result.per_seed);

  if (write_files) {
    std::string dir = config.output_dir;
    if (dir.empty()) {
      const char* env = std::getenv("DBCO_OUTPUT_DIR");
      dir = env ? env : ".";
    }
    std::filesystem::create_directories(dir);
    for (const SeedOutcome& out : result.per_seed) {
      std::string path =
          dir + "/" + config.name + "_seed" + std::to_string(out.seed) + ".csv";
      emit_csv(out.series, path);
      result.files.push_back(path);
    }
    std::string avg_path = dir + "/" + config.name + "_avg.csv";
    emit_csv(result.averaged, avg_path);
    result.files.push_back(avg_path);
  }
  return result;
}

std::string schedule_table(const ExperimentConfig& config) {
  ParameterSchedule s = config.make_schedule(
      config.f1_override > 0.0 ? config.f1_override : 1.0);
  std::ostringstream os;
  os << "resolved schedule (" << config.schedule_variant
     << ", F1=" << (config.f1_override > 0.0 ? config.f1_override : 1.0)
     << (config.f1_override > 0.0 ? "" : " placeholder; certified at run time")
     << ")\n";
  os << "t        alpha            beta             gamma            xi               delta\n";
  for (int t : {1, 10, 100}) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-8d %-16.9g %-16.9g %-16.9g %-16.9g %-16.9g\n",
                  t, s.alpha(t), s.beta(t), s.gamma(t), s.xi(t), s.delta(t));
    os << line;
  }
  return os.str();
}

std::vector<VerificationReport> run_verification_battery(std::uint64_t seed,
                                                         bool full) {
  std::vector<VerificationReport> reports;
  long n_unbiased = full ? 1000000 : 20000;
  long n_sandwich = full ? 100000 : 20000;

  for (int p : {2, 4, 16}) {
    Vec a(p), x(p);
    Substream rng(seed, StreamPurpose::Verify, 99, p);
    for (int k = 0; k < p; ++k) {
      a[k] = rng.uniform(-1.0, 1.0);
      x[k] = rng.uniform(-0.25, 0.25);
    }
    double delta = 0.1;
    auto affine = [a](const Vec& y) { return dot(a, y) + 0.5; };
    // smoothed gradient of an affine function is its own gradient
    reports.push_back(check_unbiasedness(affine, a, x, delta, n_unbiased,
                                         seed + p,
                                         "unbiasedness-affine-p" + std::to_string(p)));
    auto quadratic = [](const Vec& y) { return dot(y, y); };
    // E_v[grad ||y||^2 at x + delta v] = 2x since E[v] = 0
    reports.push_back(check_unbiasedness(quadratic, scaled(x, 2.0), x, delta,
                                         n_unbiased, seed + 100 + p,
                                         "unbiasedness-quadratic-p" + std::to_string(p)));
  }

  for (int p : {2, 4}) {
    Vec x(p, 0.1);
    auto l1 = [](const Vec& y) {
      double s = 0.0;
      for (double v : y) s += std::abs(v);
      return s;
    };
    double F2 = std::sqrt(static_cast<double>(p));  // Lipschitz constant of ||.||_1
    double fx = l1(x);
    reports.push_back(check_sandwich(l1, fx, F2, x, 0.05, n_sandwich, seed + p,
                                     "sandwich-l1-p" + std::to_string(p)));
    reports.push_back(check_sandwich(l1, fx, F2, x, 1e-6, n_sandwich,
                                     seed + 50 + p,
                                     "sandwich-l1-smalldelta-p" + std::to_string(p)));
  }

  {
    ExperimentConfig c;
    c.n = 4;
    c.p = 3;
    c.T = full ? 2000 : 200;
    c.schedule_variant = "corollary1";
    c.g = 0.1;
    c.seeds = {seed};
    ParameterSchedule provisional = c.make_schedule(1.0);
    FeasibleSet set = FeasibleSet::symmetric_box(c.p, c.halfwidth);
    std::vector<int> dims(c.n, 2);
    std::vector<AgentState> initial =
        init_agents(c.n, set, provisional, dims, seed, InitMode::Origin);
    std::vector<Vec> x_init;
    for (const AgentState& s : initial) x_init.push_back(s.x);
    RidgeProblem prob(c.n, c.p, c.T, c.lambda, seed, std::move(x_init));
    ParameterSchedule sched = c.make_schedule(prob.f1());
    GraphSequence graphs = build_graph_sequence(c, seed);
    RunOptions ropts;
    ropts.seed = seed;
    RoundTrace trace = run(prob, graphs, sched, c.T, ropts);
    reports.push_back(check_dual_bound(trace, sched, prob.f1()));
    reports.push_back(check_estimate_norms(trace, sched, prob.f1()));
  }

  return reports;
}

}  // namespace dbco
