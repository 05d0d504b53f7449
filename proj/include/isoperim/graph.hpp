#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim {

inline bool approx_eq(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Edge {
  int u = 0;
  int v = 0;
  double c = 0.0;
};

/// Undirected weighted graph with integer vertex weights and real vertex
/// potentials. Immutable after construction; all solvers share instances
/// read-only.
class WeightedGraph {
public:
  WeightedGraph() = default;

  /// Throws InputError on invalid ids, self-loops, duplicate edges, negative
  /// edge weights (unless `is_signed`), or negative vertex weights.
  /// `min_vertex_weight` is 1 for ordinary instances; decomposition trees
  /// carry weight-0 internal nodes.
  WeightedGraph(int n, std::vector<Edge> edges, std::vector<long long> vertex_weights,
                std::vector<double> potentials, bool is_signed = false,
                long long min_vertex_weight = 1);

  /// Unit vertex weights, zero potentials.
  static WeightedGraph unit(int n, std::vector<Edge> edges, bool is_signed = false);

  int n() const { return n_; }
  bool is_signed() const { return signed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  long long weight(int v) const { return w_[v]; }
  double potential(int v) const { return p_[v]; }
  long long total_weight() const { return total_w_; }
  const std::vector<long long>& weights() const { return w_; }
  const std::vector<double>& potentials() const { return p_; }

  /// (neighbor, edge index) pairs in edge insertion order.
  const std::vector<std::pair<int, int>>& adjacent(int v) const { return adj_[v]; }

  bool connected() const;  // by edge existence, ignores weights
  bool is_tree() const;

private:
  int n_ = 0;
  bool signed_ = false;
  std::vector<Edge> edges_;
  std::vector<long long> w_;
  std::vector<double> p_;
  long long total_w_ = 0;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// k pairwise-disjoint nonempty vertex sets; vertices in no part are outliers.
struct Subpartition {
  std::vector<std::vector<int>> parts;

  int k() const { return static_cast<int>(parts.size()); }
  std::vector<int> outliers(int n) const;
  /// part index per vertex, -1 for outliers
  std::vector<int> labels(int n) const;
  void sort_ids();
};

/// Total weight of edges with exactly one endpoint in `u`.
double boundary_weight(const WeightedGraph& g, std::span<const int> u);

/// (c(delta(U)) + p(U)) / w(U); throws on empty or weight-0 U.
double normalized_cut(const WeightedGraph& g, std::span<const int> u);

/// First violation of disjointness / nonemptiness / id validity, or nullopt.
std::optional<std::string> validate_subpartition(const WeightedGraph& g, const Subpartition& s);

/// Per part: is the induced subgraph connected?
std::vector<bool> parts_connected(const WeightedGraph& g, const Subpartition& s);

}  // namespace isoperim
