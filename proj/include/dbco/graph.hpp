#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dbco/geometry.hpp"
#include "dbco/rng.hpp"

namespace dbco {

// One round's communication graph. An edge (j, i) means agent i receives
// from agent j at that round. Self-loops are implicit and never stored.
// Agent indices are 0-based internally; the text export is 1-based.
struct GraphRound {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, unique, no self-loops

  void normalize();
  bool has_edge(int j, int i) const;
};

// Row- and column-stochastic mixing weights. Row i holds the weights agent i
// applies to received values.
struct MixingMatrix {
  int n = 0;
  std::vector<double> w;  // row-major n*n

  double at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
};

// Undirected Erdos-Renyi draw; chain_augment adds edges (i, i+1) for every
// consecutive pair, which guarantees connectivity.
GraphRound build_random_graph(int n, double edge_prob, Substream& rng,
                              bool chain_augment);

// Uniform-weight rule: off-diagonal 1/n on received edges, diagonal takes
// the complement. Doubly stochastic for undirected graphs with omega = 1/n.
MixingMatrix mixing_from_graph(const GraphRound& g);

// Checks the MixingMatrix invariants against a graph: stochastic rows and
// columns within tol, entries >= omega on edges and the diagonal, zeros off
// the sparsity pattern.
void validate_mixing(const MixingMatrix& W, const GraphRound& g, double omega,
                     double tol = 1e-12);

// True iff every length-B window (cyclically extended) has a strongly
// connected union graph. Self-loops are assumed.
bool validate_joint_connectivity(const std::vector<GraphRound>& seq, int B);

// output_i = sum_j W[i][j] * points_j, fixed summation order within a row.
std::vector<Vec> mix(const MixingMatrix& W, const std::vector<Vec>& points);

// Edge-list text format: one line per round, "t: j>i, j>i, ..." (1-based).
std::string export_edge_list(const std::vector<GraphRound>& seq);

// Time-varying graph sequence, either a single draw reused at every round or
// an independent redraw per round keyed by (seed, t).
class GraphSequence {
 public:
  static GraphSequence single(GraphRound g);
  static GraphSequence redrawn(int n, double edge_prob, bool chain_augment,
                               std::uint64_t seed);

  GraphRound graph(int t) const;   // t >= 1
  MixingMatrix mixing(int t) const;
  bool redraw_per_round() const { return redraw_; }
  int n() const { return n_; }

 private:
  bool redraw_ = false;
  int n_ = 0;
  double edge_prob_ = 0.0;
  bool chain_augment_ = false;
  std::uint64_t seed_ = 0;
  GraphRound fixed_;
  MixingMatrix fixed_w_;
};

}  // namespace dbco
