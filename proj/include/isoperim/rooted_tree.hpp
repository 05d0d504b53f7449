#pragma once

#include <vector>

#include "isoperim/graph.hpp"

namespace isoperim {

/// Rooted tree with a canonical child order (edge insertion order of the
/// source graph) and a DFS preorder numbering. The tree solvers rely on the
/// order being deterministic so that reconstruction and tie-breaking are
/// reproducible.
class RootedTree {
public:
  RootedTree() = default;

  int n() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  double parent_edge(int v) const { return parent_edge_[v]; }  // 0 at the root
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  long long weight(int v) const { return w_[v]; }
  double potential(int v) const { return p_[v]; }
  long long total_weight() const { return total_w_; }
  long long subtree_weight(int v) const { return sub_w_[v]; }
  int subtree_size(int v) const { return sub_n_[v]; }
  const std::vector<int>& preorder() const { return preorder_; }

  /// Vertices of the subtree rooted at v, in preorder.
  std::vector<int> subtree_vertices(int v) const;

  friend RootedTree root_tree(const WeightedGraph& g, int root);

private:
  int n_ = 0;
  int root_ = 0;
  long long total_w_ = 0;
  std::vector<int> parent_;
  std::vector<double> parent_edge_;
  std::vector<std::vector<int>> children_;
  std::vector<long long> w_;
  std::vector<double> p_;
  std::vector<long long> sub_w_;
  std::vector<int> sub_n_;
  std::vector<int> preorder_;
};

/// Roots a tree-shaped graph. Throws InputError if the graph is not a tree.
RootedTree root_tree(const WeightedGraph& g, int root);

}  // namespace isoperim
