#include "dbco/problem.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace dbco {

namespace {
constexpr int kConstraintRows = 2;
}

RidgeProblem::RidgeProblem(int n, int p, int horizon, double lambda,
                           std::uint64_t seed, std::vector<Vec> x_init,
                           double halfwidth)
    : OnlineProblem(n, p, horizon, std::vector<int>(n, kConstraintRows),
                    FeasibleSet::symmetric_box(p, halfwidth)),
      lambda_(lambda),
      seed_(seed),
      x_init_(std::move(x_init)),
      halfwidth_(halfwidth) {
  if (n < 1 || p < 1 || horizon < 1)
    throw std::invalid_argument("RidgeProblem: bad dimensions");
  if (!(lambda >= 0.0)) throw std::invalid_argument("RidgeProblem: lambda >= 0");
  if (static_cast<int>(x_init_.size()) != n)
    throw std::invalid_argument("RidgeProblem: x_init size mismatch");
  for (const Vec& x0 : x_init_)
    if (static_cast<int>(x0.size()) != p)
      throw std::invalid_argument("RidgeProblem: x_init dimension mismatch");
  mu_ = 2.0 * lambda;
  certify_bounds();
}

// Per-(agent, round) draw order is fixed: a (p values), B (2*p), b (2),
// then the label noise from its own stream.
Vec RidgeProblem::feature(int i, int t) const {
  Substream rng(seed_, StreamPurpose::ProblemData, static_cast<std::uint64_t>(i),
                static_cast<std::uint64_t>(t));
  Vec a(p_);
  for (int k = 0; k < p_; ++k) a[k] = rng.uniform(-5.0, 5.0);
  return a;
}

void RidgeProblem::constraint_data(int i, int t, std::vector<double>& B,
                                   Vec& b) const {
  Substream rng(seed_, StreamPurpose::ProblemData, static_cast<std::uint64_t>(i),
                static_cast<std::uint64_t>(t));
  for (int k = 0; k < p_; ++k) (void)rng.uniform();  // skip a
  B.resize(static_cast<std::size_t>(kConstraintRows) * p_);
  for (double& v : B) v = rng.uniform(0.0, 2.0);
  b.resize(kConstraintRows);
  for (double& v : b) v = rng.uniform(0.0, 1.0);
}

double RidgeProblem::label(int i, int t) const {
  Substream rng(seed_, StreamPurpose::Labels, static_cast<std::uint64_t>(i),
                static_cast<std::uint64_t>(t));
  double ups = rng.uniform();
  return dot(feature(i, t), x_init_[i]) + ups / (4.0 * t);
}

double RidgeProblem::loss(int i, int t, const Vec& x) const {
  double res = dot(feature(i, t), x) - label(i, t);
  return 0.5 * res * res + lambda_ * dot(x, x);
}

Vec RidgeProblem::loss_subgrad(int i, int t, const Vec& x) const {
  Vec a = feature(i, t);
  double res = dot(a, x) - label(i, t);
  Vec g = scaled(a, res);
  axpy(2.0 * lambda_, x, g);
  return g;
}

Vec RidgeProblem::constraint(int i, int t, const Vec& x) const {
  std::vector<double> B;
  Vec b;
  constraint_data(i, t, B, b);
  Vec c(kConstraintRows);
  for (int j = 0; j < kConstraintRows; ++j) {
    double s = 0.0;
    for (int k = 0; k < p_; ++k) s += B[static_cast<std::size_t>(j) * p_ + k] * x[k];
    c[j] = s - b[j];
  }
  return c;
}

std::vector<Vec> RidgeProblem::constraint_subgrad(int i, int t, const Vec& x) const {
  (void)x;  // affine constraints
  std::vector<double> B;
  Vec b;
  constraint_data(i, t, B, b);
  std::vector<Vec> cols(kConstraintRows, Vec(p_));
  for (int j = 0; j < kConstraintRows; ++j)
    for (int k = 0; k < p_; ++k)
      cols[j][k] = B[static_cast<std::size_t>(j) * p_ + k];
  return cols;
}

bool RidgeProblem::quadratic_objective(int t0, int t1, std::vector<double>& H,
                                       Vec& lin, double& c) const {
  H.assign(static_cast<std::size_t>(p_) * p_, 0.0);
  lin.assign(p_, 0.0);
  c = 0.0;
  double invn = 1.0 / n_;
  long rounds = 0;
  for (int t = t0; t <= t1; ++t) {
    ++rounds;
    for (int i = 0; i < n_; ++i) {
      Vec a = feature(i, t);
      double m = label(i, t);
      for (int r = 0; r < p_; ++r)
        for (int s = 0; s < p_; ++s)
          H[static_cast<std::size_t>(r) * p_ + s] += invn * a[r] * a[s];
      axpy(-invn * m, a, lin);
      c += invn * 0.5 * m * m;
    }
  }
  for (int r = 0; r < p_; ++r)
    H[static_cast<std::size_t>(r) * p_ + r] += 2.0 * lambda_ * rounds;
  return true;
}

bool RidgeProblem::affine_constraints(int t0, int t1, std::vector<double>& rows,
                                      Vec& rhs) const {
  rows.clear();
  rhs.clear();
  std::vector<double> B;
  Vec b;
  for (int t = t0; t <= t1; ++t) {
    for (int i = 0; i < n_; ++i) {
      constraint_data(i, t, B, b);
      rows.insert(rows.end(), B.begin(), B.end());
      rhs.insert(rhs.end(), b.begin(), b.end());
    }
  }
  return true;
}

// Interval bounds over the box [-hw, hw]^p:
//   |a'x - m| <= hw * sum_k |a_k| + |m|
//   (B x - b)_j in [-hw * sum_k B_jk - b_j, hw * sum_k B_jk - b_j]
void RidgeProblem::certify_bounds() {
  double f1 = 0.0, f2 = 0.0;
  double hw = halfwidth_;
  double reg_val = lambda_ * hw * hw * p_;
  double reg_grad = 2.0 * lambda_ * hw * std::sqrt(static_cast<double>(p_));
  std::vector<double> B;
  Vec b;
  for (int t = 1; t <= horizon_; ++t) {
    for (int i = 0; i < n_; ++i) {
      Vec a = feature(i, t);
      double m = label(i, t);
      double a1 = 0.0, a2 = 0.0;
      for (double v : a) {
        a1 += std::abs(v);
        a2 += v * v;
      }
      double res = hw * a1 + std::abs(m);
      f1 = std::max(f1, 0.5 * res * res + reg_val);
      f2 = std::max(f2, std::sqrt(a2) * res + reg_grad);

      constraint_data(i, t, B, b);
      double c2 = 0.0, frob2 = 0.0;
      for (int j = 0; j < kConstraintRows; ++j) {
        double rowsum = 0.0;
        for (int k = 0; k < p_; ++k) {
          double v = B[static_cast<std::size_t>(j) * p_ + k];
          rowsum += v;
          frob2 += v * v;
        }
        double bound = hw * rowsum + b[j];
        c2 += bound * bound;
      }
      f1 = std::max(f1, std::sqrt(c2));
      f2 = std::max(f2, std::sqrt(frob2));
    }
  }
  f1_ = f1;
  f2_ = f2;
}

std::string RidgeProblem::to_json() const {
  nlohmann::json j;
  j["format"] = "dbco-ridge";
  j["version"] = 1;
  j["n"] = n_;
  j["p"] = p_;
  j["horizon"] = horizon_;
  j["lambda"] = lambda_;
  j["seed"] = seed_;
  j["halfwidth"] = halfwidth_;
  j["x_init"] = x_init_;
  return j.dump(2);
}

RidgeProblem RidgeProblem::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format") != "dbco-ridge" || j.at("version") != 1)
    throw std::invalid_argument("RidgeProblem::from_json: unknown format");
  return RidgeProblem(j.at("n").get<int>(), j.at("p").get<int>(),
                      j.at("horizon").get<int>(), j.at("lambda").get<double>(),
                      j.at("seed").get<std::uint64_t>(),
                      j.at("x_init").get<std::vector<Vec>>(),
                      j.at("halfwidth").get<double>());
}

std::vector<Vec> ridge_fixed_target_inits(std::uint64_t seed, int n, int p,
                                          double halfwidth) {
  std::vector<Vec> inits(n, Vec(p));
  for (int i = 0; i < n; ++i) {
    Substream rng(seed, StreamPurpose::InitPrimal, static_cast<std::uint64_t>(i), 0);
    for (int k = 0; k < p; ++k)
      inits[i][k] = rng.uniform(-halfwidth / 2.0, halfwidth / 2.0);
  }
  return inits;
}

RidgeProblem make_ridge_problem(int n, int p, int horizon, double lambda,
                                std::uint64_t seed, std::vector<Vec> x_init,
                                double halfwidth) {
  return RidgeProblem(n, p, horizon, lambda, seed, std::move(x_init), halfwidth);
}

}  // namespace dbco
