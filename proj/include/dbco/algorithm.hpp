#pragma once

#include <cstdint>
#include <vector>

#include "dbco/bandit.hpp"
#include "dbco/geometry.hpp"
#include "dbco/graph.hpp"
#include "dbco/problem.hpp"
#include "dbco/schedule.hpp"

namespace dbco {

enum class EstimatorMode { OnePoint, TwoPoint };
enum class InitMode { Origin, RandomInShrunkSet };

// One agent's primal-dual state at round t:
//   e in (1 - xi(t)) X, x = e + delta(t) u exactly, q >= 0 componentwise
// with ||q|| <= F1/beta(t) maintained by the damped dual update.
struct AgentState {
  int id = 0;
  Vec e;
  Vec x;
  Vec u;
  Vec q;
  long samples_used = 0;
};

// Per-round snapshot of all agents plus the sampled oracle values feeding
// the next update.
struct RoundRecord {
  std::vector<Vec> x, e, q;
  Vec loss_values;                 // l_{i,t}(x_{i,t})
  std::vector<Vec> cons_values;    // c_{i,t}(x_{i,t})
  std::vector<long> cum_samples;   // per agent
};

struct RoundTrace {
  int n = 0, p = 0;
  std::vector<RoundRecord> rounds;  // index t-1, length = executed rounds

  int executed_rounds() const { return static_cast<int>(rounds.size()); }
  long total_samples_at(int t) const;  // network-wide cumulative at round t
};

std::vector<AgentState> init_agents(int n, const FeasibleSet& set,
                                    const ParameterSchedule& sched,
                                    const std::vector<int>& dims,
                                    std::uint64_t seed,
                                    InitMode init = InitMode::Origin);

// One primal-dual transition (round t -> t+1) given this agent's mixed point
// and the values sampled at x_{i,t}. next_u is the fresh exploration
// direction u_{i,t+1}.
AgentState agent_step(const AgentState& state, const Vec& z_next,
                      double loss_value, const Vec& constraint_values,
                      const FeasibleSet& set, const ParameterSchedule& sched,
                      int t, const Vec& next_u);

// Two-point diagnostic variant: the update direction swaps in symmetric
// difference estimates from the extra samples at e - delta u.
AgentState agent_step_two_point(const AgentState& state, const Vec& z_next,
                                double loss_plus, const Vec& cons_plus,
                                double loss_minus, const Vec& cons_minus,
                                const FeasibleSet& set,
                                const ParameterSchedule& sched, int t,
                                const Vec& next_u);

struct RunOptions {
  std::uint64_t seed = 1;
  EstimatorMode mode = EstimatorMode::OnePoint;
  InitMode init = InitMode::Origin;
  int threads = 1;
};

// Full-horizon execution: mixing (all e from round t) then per-agent updates,
// for t = 1..T-1; round T's decisions are recorded without a further update.
// A deterministic function of (seed, config) regardless of thread count.
RoundTrace run(const OnlineProblem& problem, const GraphSequence& graphs,
               const ParameterSchedule& sched, int T, const RunOptions& opts);

}  // namespace dbco
