#include "dbco/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dbco {

void GraphRound::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [j, i] : edges) {
    if (j < 0 || j >= n || i < 0 || i >= n)
      throw std::invalid_argument("GraphRound: index out of range");
    if (j == i) throw std::invalid_argument("GraphRound: explicit self-loop");
  }
}

bool GraphRound::has_edge(int j, int i) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(j, i));
}

GraphRound build_random_graph(int n, double edge_prob, Substream& rng,
                              bool chain_augment) {
  if (n < 2) throw std::invalid_argument("build_random_graph: n >= 2 required");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("build_random_graph: edge_prob in [0,1]");
  GraphRound g;
  g.n = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.uniform() < edge_prob) {
        g.edges.emplace_back(a, b);
        g.edges.emplace_back(b, a);
      }
    }
  }
  if (chain_augment) {
    for (int a = 0; a + 1 < n; ++a) {
      g.edges.emplace_back(a, a + 1);
      g.edges.emplace_back(a + 1, a);
    }
  }
  g.normalize();
  return g;
}

MixingMatrix mixing_from_graph(const GraphRound& g) {
  MixingMatrix W;
  W.n = g.n;
  W.w.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
  double inv = 1.0 / g.n;
  for (const auto& [j, i] : g.edges) W.at(i, j) = inv;
  for (int i = 0; i < g.n; ++i) {
    double off = 0.0;
    for (int j = 0; j < g.n; ++j)
      if (j != i) off += W.at(i, j);
    double diag = 1.0 - off;
    if (diag < inv - 1e-12)
      throw std::runtime_error("mixing_from_graph: diagonal below 1/n");
    W.at(i, i) = diag;
  }
  return W;
}

void validate_mixing(const MixingMatrix& W, const GraphRound& g, double omega,
                     double tol) {
  if (W.n != g.n) throw std::invalid_argument("validate_mixing: size mismatch");
  for (int i = 0; i < W.n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < W.n; ++j) {
      row += W.at(i, j);
      col += W.at(j, i);
      bool connected = (i == j) || g.has_edge(j, i);
      if (connected) {
        if (W.at(i, j) < omega - tol)
          throw std::runtime_error("validate_mixing: weight below omega");
      } else if (W.at(i, j) != 0.0) {
        throw std::runtime_error("validate_mixing: nonzero off sparsity pattern");
      }
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol)
      throw std::runtime_error("validate_mixing: not doubly stochastic");
  }
}

namespace {

bool strongly_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [j, i] : edges) {
        int from = forward ? j : i;
        int to = forward ? i : j;
        if (from == v && !seen[to]) {
          seen[to] = 1;
          ++count;
          stack.push_back(to);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

}  // namespace

bool validate_joint_connectivity(const std::vector<GraphRound>& seq, int B) {
  if (B < 1 || seq.empty())
    throw std::invalid_argument("validate_joint_connectivity: bad arguments");
  int n = seq.front().n;
  int len = static_cast<int>(seq.size());
  for (int s = 0; s < len; ++s) {
    std::vector<std::pair<int, int>> uni;
    for (int k = 0; k < B; ++k) {
      const auto& g = seq[(s + k) % len];
      if (g.n != n)
        throw std::invalid_argument("validate_joint_connectivity: n varies");
      uni.insert(uni.end(), g.edges.begin(), g.edges.end());
    }
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    if (!strongly_connected(n, uni)) return false;
  }
  return true;
}

std::vector<Vec> mix(const MixingMatrix& W, const std::vector<Vec>& points) {
  if (static_cast<int>(points.size()) != W.n)
    throw std::invalid_argument("mix: point count mismatch");
  std::size_t p = points.empty() ? 0 : points.front().size();
  std::vector<Vec> out(points.size(), Vec(p, 0.0));
  for (int i = 0; i < W.n; ++i) {
    for (int j = 0; j < W.n; ++j) {
      double wij = W.at(i, j);
      if (wij == 0.0) continue;
      if (points[j].size() != p) throw std::invalid_argument("mix: ragged points");
      for (std::size_t k = 0; k < p; ++k) out[i][k] += wij * points[j][k];
    }
  }
  return out;
}

std::string export_edge_list(const std::vector<GraphRound>& seq) {
  std::ostringstream os;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    os << (t + 1) << ":";
    bool first = true;
    for (const auto& [j, i] : seq[t].edges) {
      os << (first ? " " : ", ") << (j + 1) << ">" << (i + 1);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

GraphSequence GraphSequence::single(GraphRound g) {
  GraphSequence s;
  s.redraw_ = false;
  s.n_ = g.n;
  s.fixed_w_ = mixing_from_graph(g);
  s.fixed_ = std::move(g);
  return s;
}

GraphSequence GraphSequence::redrawn(int n, double edge_prob, bool chain_augment,
                                     std::uint64_t seed) {
  GraphSequence s;
  s.redraw_ = true;
  s.n_ = n;
  s.edge_prob_ = edge_prob;
  s.chain_augment_ = chain_augment;
  s.seed_ = seed;
  return s;
}

GraphRound GraphSequence::graph(int t) const {
  if (!redraw_) return fixed_;
  Substream rng(seed_, StreamPurpose::GraphEdges, 0,
                static_cast<std::uint64_t>(t));
  return build_random_graph(n_, edge_prob_, rng, chain_augment_);
}

MixingMatrix GraphSequence::mixing(int t) const {
  if (!redraw_) return fixed_w_;
  return mixing_from_graph(graph(t));
}

}  // namespace dbco
