#pragma once

#include <cmath>
#include <cstdint>

namespace dbco {

// Deterministic counter-based substreams.
//
// Every random draw in the library is keyed by (master seed, purpose, agent,
// round). The key is absorbed sequentially into a SplitMix64 state, so two
// streams with different keys are statistically independent and a stream's
// output never depends on how many draws other streams have made. This is
// what makes traces bit-identical across thread counts.
enum class StreamPurpose : std::uint64_t {
  Sphere = 1,       // exploration directions u_{i,t}
  GraphEdges = 2,   // random graph draws
  ProblemData = 3,  // per-(agent, round) instance data
  Labels = 4,       // label noise
  BallRadius = 5,   // radius law for uniform-ball sampling
  InitPrimal = 6,   // optional random initialization of e_{i,1}
  Oracle = 7,       // offline benchmark solvers
  Verify = 8,       // verification battery
  Misc = 9,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class Substream {
 public:
  Substream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t agent = 0,
            std::uint64_t round = 0) {
    state_ = seed;
    absorb(static_cast<std::uint64_t>(purpose));
    absorb(agent);
    absorb(round);
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the spare value is cached so one draw
  // costs one transform on average. The transform is fixed here (not
  // delegated to <random>) so streams replay identically everywhere.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925286766559 * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
  }

 private:
  // Each field is mixed into the state before the next one is added, so
  // (agent, round) and (round, agent) land in different streams.
  void absorb(std::uint64_t v) {
    state_ ^= v * 0xd1342543de82ef95ULL;
    (void)detail::splitmix64(state_);
  }

  std::uint64_t state_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dbco
