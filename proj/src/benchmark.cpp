#include "dbco/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace dbco {

namespace {

// final step is step_scale * kStepFloor; geometric decay keeps the late
// iterates from jittering at a c0/sqrt(K)-sized accuracy floor
constexpr double kStepFloor = 1e-6;

// Window objective/subgradient/constraint evaluators, using the problem's
// affine/quadratic fast paths when it provides them.
struct WindowOracles {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> subgrad;
  // hinge penalty value sum ||[c]_+||_1 and its subgradient contribution
  std::function<double(const Vec&, Vec* sub)> penalty;
  std::function<double(const Vec&)> max_violation;
};

WindowOracles build_oracles(const OnlineProblem& prob, int t0, int t1) {
  WindowOracles w;
  int p = prob.p();

  std::vector<double> H;
  Vec lin;
  double c0 = 0.0;
  if (prob.quadratic_objective(t0, t1, H, lin, c0)) {
    auto Hs = std::make_shared<std::vector<double>>(std::move(H));
    auto ls = std::make_shared<Vec>(std::move(lin));
    double cc = c0;
    w.value = [Hs, ls, cc, p](const Vec& x) {
      double v = cc;
      for (int r = 0; r < p; ++r) {
        double hr = 0.0;
        for (int s = 0; s < p; ++s) hr += (*Hs)[static_cast<std::size_t>(r) * p + s] * x[s];
        v += 0.5 * x[r] * hr + (*ls)[r] * x[r];
      }
      return v;
    };
    w.subgrad = [Hs, ls, p](const Vec& x) {
      Vec g(p);
      for (int r = 0; r < p; ++r) {
        double hr = 0.0;
        for (int s = 0; s < p; ++s) hr += (*Hs)[static_cast<std::size_t>(r) * p + s] * x[s];
        g[r] = hr + (*ls)[r];
      }
      return g;
    };
  } else {
    const OnlineProblem* pr = &prob;
    double invn = 1.0 / prob.n();
    w.value = [pr, t0, t1, invn](const Vec& x) {
      double v = 0.0;
      for (int t = t0; t <= t1; ++t)
        for (int i = 0; i < pr->n(); ++i) v += invn * pr->loss(i, t, x);
      return v;
    };
    w.subgrad = [pr, t0, t1, invn](const Vec& x) {
      Vec g(x.size(), 0.0);
      for (int t = t0; t <= t1; ++t)
        for (int i = 0; i < pr->n(); ++i) axpy(invn, pr->loss_subgrad(i, t, x), g);
      return g;
    };
  }

  std::vector<double> rows;
  Vec rhs;
  if (prob.affine_constraints(t0, t1, rows, rhs)) {
    auto Rs = std::make_shared<std::vector<double>>(std::move(rows));
    auto bs = std::make_shared<Vec>(std::move(rhs));
    w.penalty = [Rs, bs, p](const Vec& x, Vec* sub) {
      double pen = 0.0;
      std::size_t nrows = bs->size();
      const double* R = Rs->data();
      for (std::size_t j = 0; j < nrows; ++j) {
        const double* row = R + j * p;
        double v = -(*bs)[j];
        for (int k = 0; k < p; ++k) v += row[k] * x[k];
        if (v > 0.0) {
          pen += v;
          if (sub)
            for (int k = 0; k < p; ++k) (*sub)[k] += row[k];
        }
      }
      return pen;
    };
    w.max_violation = [Rs, bs, p](const Vec& x) {
      double worst = 0.0;
      std::size_t nrows = bs->size();
      const double* R = Rs->data();
      for (std::size_t j = 0; j < nrows; ++j) {
        const double* row = R + j * p;
        double v = -(*bs)[j];
        for (int k = 0; k < p; ++k) v += row[k] * x[k];
        worst = std::max(worst, v);
      }
      return worst;
    };
  } else {
    const OnlineProblem* pr = &prob;
    w.penalty = [pr, t0, t1](const Vec& x, Vec* sub) {
      double pen = 0.0;
      for (int t = t0; t <= t1; ++t) {
        for (int i = 0; i < pr->n(); ++i) {
          Vec c = pr->constraint(i, t, x);
          std::vector<Vec> cols;
          for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] > 0.0) {
              pen += c[j];
              if (sub) {
                if (cols.empty()) cols = pr->constraint_subgrad(i, t, x);
                axpy(1.0, cols[j], *sub);
              }
            }
          }
        }
      }
      return pen;
    };
    w.max_violation = [pr, t0, t1](const Vec& x) {
      double worst = 0.0;
      for (int t = t0; t <= t1; ++t)
        for (int i = 0; i < pr->n(); ++i)
          for (double v : pr->constraint(i, t, x)) worst = std::max(worst, v);
      return worst;
    };
  }
  return w;
}

}  // namespace

BenchmarkResult minimize_window(const OnlineProblem& prob, int t0, int t1,
                                double tol, const BenchmarkOptions& opts) {
  if (t0 < 1 || t1 > prob.horizon() || t0 > t1)
    throw std::invalid_argument("minimize_window: bad round window");
  WindowOracles w = build_oracles(prob, t0, t1);
  const FeasibleSet& set = prob.set();
  int p = prob.p();

  double c0 = opts.step_scale > 0.0 ? opts.step_scale : set.outer_radius();
  double g0 = norm(w.subgrad(Vec(p, 0.0)));
  double rho = opts.penalty_init > 0.0 ? opts.penalty_init
                                       : std::max(1.0, 10.0 * g0);

  Vec x(p, 0.0);  // strictly feasible start for the ridge family
  Vec best = x;
  double best_merit = w.value(x) + rho * w.penalty(x, nullptr);

  long iters_done = 0;
  int doublings = 0;
  long check_every = std::max<long>(1, opts.max_iters / (opts.penalty_doublings + 1));
  Vec d(p);
  for (long k = 1; k <= opts.max_iters; ++k) {
    std::fill(d.begin(), d.end(), 0.0);
    double pen = w.penalty(x, &d);
    for (double& v : d) v *= rho;
    axpy(1.0, w.subgrad(x), d);
    double dn = norm(d);
    double merit = w.value(x) + rho * pen;
    if (merit < best_merit) {
      best_merit = merit;
      best = x;
    }
    if (dn > 0.0) {
      // geometric decay from c0 to c0 * kStepFloor across the budget; the
      // normalized-direction floor c0/sqrt(K) is too coarse for tight
      // objective tolerances
      double frac = opts.max_iters > 1
                        ? static_cast<double>(k - 1) / (opts.max_iters - 1)
                        : 1.0;
      double step = c0 * std::pow(kStepFloor, frac) / dn;
      for (int j = 0; j < p; ++j) x[j] -= step * d[j];
      x = set.project(x);
    }
    iters_done = k;
    if (k % check_every == 0 && doublings < opts.penalty_doublings) {
      if (w.max_violation(best) > tol) {
        rho *= 2.0;
        ++doublings;
        x = best;
        best_merit = w.value(best) + rho * w.penalty(best, nullptr);
      }
    }
  }

  BenchmarkResult res;
  res.x = best;
  res.objective = w.value(best);
  res.max_violation = w.max_violation(best);
  res.iters = iters_done;
  res.converged = res.max_violation <= tol;
  if (!res.converged && opts.throw_on_failure) {
    std::ostringstream os;
    os << "benchmark oracle did not converge: max_violation=" << res.max_violation
       << " tol=" << tol << " iters=" << res.iters << " penalty=" << rho;
    throw std::runtime_error(os.str());
  }
  return res;
}

BenchmarkResult static_benchmark(const OnlineProblem& prob, double tol,
                                 const BenchmarkOptions& opts) {
  return minimize_window(prob, 1, prob.horizon(), tol, opts);
}

BenchmarkResult dynamic_benchmark(const OnlineProblem& prob, int t, double tol,
                                  const BenchmarkOptions& opts) {
  return minimize_window(prob, t, t, tol, opts);
}

}  // namespace dbco
