#include "dbco/algorithm.hpp"

#include <functional>
#include <stdexcept>
#include <thread>

namespace dbco {

long RoundTrace::total_samples_at(int t) const {
  const RoundRecord& rec = rounds.at(static_cast<std::size_t>(t) - 1);
  long total = 0;
  for (long s : rec.cum_samples) total += s;
  return total;
}

std::vector<AgentState> init_agents(int n, const FeasibleSet& set,
                                    const ParameterSchedule& sched,
                                    const std::vector<int>& dims,
                                    std::uint64_t seed, InitMode init) {
  if (n < 1) throw std::invalid_argument("init_agents: n >= 1 required");
  if (static_cast<int>(dims.size()) != n)
    throw std::invalid_argument("init_agents: dims size mismatch");
  int p = set.dim();
  std::vector<AgentState> agents(n);
  double d1 = sched.delta(1);
  double shrink = 1.0 - sched.xi(1);
  for (int i = 0; i < n; ++i) {
    AgentState& s = agents[i];
    s.id = i;
    if (init == InitMode::Origin) {
      s.e.assign(p, 0.0);
    } else {
      Substream rng(seed, StreamPurpose::InitPrimal,
                    static_cast<std::uint64_t>(i), 1);
      Vec raw(p);
      if (set.kind() == SetKind::Box) {
        for (int k = 0; k < p; ++k)
          raw[k] = rng.uniform(set.lo()[k], set.hi()[k]);
      } else {
        Substream rad(seed, StreamPurpose::BallRadius,
                      static_cast<std::uint64_t>(i), 1);
        raw = sample_unit_ball(rng, rad, p);
        for (double& v : raw) v *= set.radius();
      }
      s.e = scaled(raw, shrink);
    }
    Substream urng(seed, StreamPurpose::Sphere, static_cast<std::uint64_t>(i), 1);
    s.u = sample_unit_sphere(urng, p);
    s.x = s.e;
    axpy(d1, s.u, s.x);
    s.q.assign(dims[i], 0.0);
    s.samples_used = 0;
  }
  return agents;
}

namespace {

// Shared tail of the update: Eq-(15)-style shrunk projection of the primal
// step, fresh exploration offset, damped nonnegative dual step.
AgentState finish_step(const AgentState& state, const Vec& z_next,
                       const Vec& direction, const Vec& cons_at_x,
                       const FeasibleSet& set, const ParameterSchedule& sched,
                       int t, const Vec& next_u, int samples_this_round) {
  AgentState next;
  next.id = state.id;

  Vec target = z_next;
  axpy(-sched.alpha(t + 1), direction, target);
  next.e = set.project_scaled(1.0 - sched.xi(t + 1), target);

  next.u = next_u;
  next.x = next.e;
  axpy(sched.delta(t + 1), next.u, next.x);

  double bg = sched.beta(t + 1) * sched.gamma(t + 1);
  Vec q = scaled(state.q, 1.0 - bg);
  axpy(sched.gamma(t + 1), project_nonneg(cons_at_x), q);
  next.q = project_nonneg(std::move(q));

  next.samples_used = state.samples_used + samples_this_round;
  return next;
}

}  // namespace

AgentState agent_step(const AgentState& state, const Vec& z_next,
                      double loss_value, const Vec& constraint_values,
                      const FeasibleSet& set, const ParameterSchedule& sched,
                      int t, const Vec& next_u) {
  double delta = sched.delta(t);
  LossGradEstimate lg = estimate_loss_gradient(loss_value, delta, state.u);
  ConstraintJacEstimate cj =
      estimate_constraint_jacobian(constraint_values, delta, state.u);
  Vec direction = lg.g;
  axpy(1.0, cj.apply_to_dual(state.q), direction);
  return finish_step(state, z_next, direction, constraint_values, set, sched, t,
                     next_u, 2);
}

AgentState agent_step_two_point(const AgentState& state, const Vec& z_next,
                                double loss_plus, const Vec& cons_plus,
                                double loss_minus, const Vec& cons_minus,
                                const FeasibleSet& set,
                                const ParameterSchedule& sched, int t,
                                const Vec& next_u) {
  double delta = sched.delta(t);
  LossGradEstimate lg = estimate_two_point(loss_plus, loss_minus, delta, state.u);
  ConstraintJacEstimate cj =
      estimate_constraint_jacobian_two_point(cons_plus, cons_minus, delta, state.u);
  Vec direction = lg.g;
  axpy(1.0, cj.apply_to_dual(state.q), direction);
  return finish_step(state, z_next, direction, cons_plus, set, sched, t, next_u, 4);
}

namespace {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

RoundTrace run(const OnlineProblem& problem, const GraphSequence& graphs,
               const ParameterSchedule& sched, int T, const RunOptions& opts) {
  if (T < 2) throw std::invalid_argument("run: T >= 2 required");
  int n = problem.n();
  if (graphs.n() != n) throw std::invalid_argument("run: graph/problem size mismatch");
  if (problem.p() != sched.p())
    throw std::invalid_argument("run: schedule dimension mismatch");
  const FeasibleSet& set = problem.set();
  bool two_point = opts.mode == EstimatorMode::TwoPoint;
  int per_round = two_point ? 4 : 2;

  RoundTrace trace;
  trace.n = n;
  trace.p = problem.p();
  trace.rounds.reserve(T);

  std::vector<AgentState> agents =
      init_agents(n, set, sched, problem.dims(), opts.seed, opts.init);

  // extra two-point samples at e - delta u, kept outside the trace
  std::vector<double> loss_minus(n, 0.0);
  std::vector<Vec> cons_minus(n);

  auto record_round = [&](int t) {
    RoundRecord rec;
    rec.x.resize(n);
    rec.e.resize(n);
    rec.q.resize(n);
    rec.loss_values.resize(n);
    rec.cons_values.resize(n);
    rec.cum_samples.resize(n);
    parallel_for(n, opts.threads, [&](int i) {
      AgentState& s = agents[i];
      rec.x[i] = s.x;
      rec.e[i] = s.e;
      rec.q[i] = s.q;
      rec.loss_values[i] = problem.loss(i, t, s.x);
      rec.cons_values[i] = problem.constraint(i, t, s.x);
      if (two_point) {
        Vec xm = s.e;
        axpy(-sched.delta(t), s.u, xm);
        loss_minus[i] = problem.loss(i, t, xm);
        cons_minus[i] = problem.constraint(i, t, xm);
      }
      // queries made through round t: consumed by past updates + this round's
      rec.cum_samples[i] = s.samples_used + per_round;
    });
    trace.rounds.push_back(std::move(rec));
  };

  record_round(1);
  for (int t = 1; t <= T - 1; ++t) {
    MixingMatrix W = graphs.mixing(t);
    const RoundRecord& cur = trace.rounds.back();
    std::vector<Vec> z = mix(W, cur.e);
    parallel_for(n, opts.threads, [&](int i) {
      Substream urng(opts.seed, StreamPurpose::Sphere,
                     static_cast<std::uint64_t>(i),
                     static_cast<std::uint64_t>(t) + 1);
      Vec next_u = sample_unit_sphere(urng, problem.p());
      if (two_point) {
        agents[i] = agent_step_two_point(agents[i], z[i], cur.loss_values[i],
                                         cur.cons_values[i], loss_minus[i],
                                         cons_minus[i], set, sched, t, next_u);
      } else {
        agents[i] = agent_step(agents[i], z[i], cur.loss_values[i],
                               cur.cons_values[i], set, sched, t, next_u);
      }
    });
    record_round(t + 1);
  }
  return trace;
}

}  // namespace dbco
