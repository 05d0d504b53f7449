#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isoperim/graph.hpp"
#include "isoperim/rooted_tree.hpp"

namespace isoperim {

enum class HstStrategy { ExactSparsestCut, SpectralSweep };

/// Laminar cluster tree over the vertices of a graph. Leaves are the graph
/// vertices (node id == vertex id); internal nodes get ids >= n in creation
/// order, so the root of a multi-vertex graph is node n. The edge from a node
/// to its parent weighs exactly boundary_weight(G, cluster of that node),
/// which is what makes tree mincuts a lower bound on graph cuts.
class DecompositionTree {
public:
  int node_count() const { return static_cast<int>(parent_.size()); }
  int graph_n() const { return n_graph_; }
  int root() const { return root_; }
  int parent(int node) const { return parent_[node]; }
  double up_weight(int node) const { return up_w_[node]; }
  const std::vector<int>& children(int node) const { return children_[node]; }
  bool is_leaf(int node) const { return node < n_graph_; }
  int leaf_of(int node) const { return is_leaf(node) ? node : -1; }
  long long node_weight(int node) const { return is_leaf(node) ? 1 : 0; }
  double node_potential(int node) const { return is_leaf(node) ? leaf_potential_[node] : 0.0; }
  /// Graph vertices under `node`, ascending.
  std::vector<int> cluster(int node) const;
  /// Nodes in an order where children precede parents.
  const std::vector<int>& postorder() const { return postorder_; }

  /// The same tree in the shape the tree DP consumes: leaf weight 1,
  /// internal weight 0, potentials on leaves.
  RootedTree to_rooted_tree() const;

  friend DecompositionTree build_hst_with_costs(const WeightedGraph& structure,
                                                const WeightedGraph& costs, HstStrategy strategy,
                                                std::uint64_t seed);

private:
  int n_graph_ = 0;
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<double> up_w_;
  std::vector<std::vector<int>> children_;
  std::vector<double> leaf_potential_;
  std::vector<int> postorder_;
};

/// Recursive sparsest-cut decomposition. Requires a connected, unsigned
/// graph. Exact strategy enumerates all cuts of clusters up to 16 vertices
/// and falls back to the spectral sweep above that; the spectral strategy
/// always sweeps. The seed only feeds the power-iteration start vector.
DecompositionTree build_hst(const WeightedGraph& g, HstStrategy strategy, std::uint64_t seed);

/// Structure is found on `structure` (e.g. a clamped nonnegative copy of a
/// signed graph) while tree edge weights are boundary weights in `costs`.
DecompositionTree build_hst_with_costs(const WeightedGraph& structure, const WeightedGraph& costs,
                                       HstStrategy strategy, std::uint64_t seed);

/// Minimum total weight of tree edges whose removal separates the leaves in
/// `u` from all other leaves. Exact two-state DP over the tree.
double tree_mincut(const DecompositionTree& t, std::span<const int> u);

struct StretchReport {
  struct Bucket {
    double upper = 0.0;  // ratios r with prev < r <= upper land here
    long long count = 0;
  };
  long long samples = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::vector<Bucket> histogram;
};

/// Ratios tree_mincut(U) / c(delta_G(U)) over all nonempty proper U (n <= 14).
StretchReport stretch_report_exhaustive(const WeightedGraph& g, const DecompositionTree& t);

/// Same over `samples` seeded random subsets.
StretchReport stretch_report_sampled(const WeightedGraph& g, const DecompositionTree& t,
                                     int samples, std::uint64_t seed);

/// Tree-node subpartition -> graph-vertex subpartition (parts become the
/// unions of the leaf sets under their nodes).
Subpartition map_tree_solution(const DecompositionTree& t, const Subpartition& tree_parts);

}  // namespace isoperim
