#include "isoperim/rooted_tree.hpp"

namespace isoperim {

RootedTree root_tree(const WeightedGraph& g, int root) {
  if (g.n() == 0) throw InputError("root_tree: empty graph");
  if (root < 0 || root >= g.n()) throw InputError("root_tree: invalid root id");
  if (static_cast<int>(g.edges().size()) != g.n() - 1 || !g.connected())
    throw InputError("root_tree: graph is not a tree (needs n-1 edges and connectivity)");

  RootedTree t;
  t.n_ = g.n();
  t.root_ = root;
  t.total_w_ = g.total_weight();
  t.parent_.assign(t.n_, -1);
  t.parent_edge_.assign(t.n_, 0.0);
  t.children_.assign(t.n_, {});
  t.w_.resize(t.n_);
  t.p_.resize(t.n_);
  for (int v = 0; v < t.n_; ++v) {
    t.w_[v] = g.weight(v);
    t.p_[v] = g.potential(v);
  }

  // Iterative DFS keeping the children in edge insertion order.
  std::vector<char> seen(t.n_, 0);
  std::vector<int> stack = {root};
  seen[root] = 1;
  t.preorder_.reserve(t.n_);
  std::vector<size_t> cursor(t.n_, 0);
  while (!stack.empty()) {
    int v = stack.back();
    if (cursor[v] == 0) t.preorder_.push_back(v);
    if (cursor[v] < g.adjacent(v).size()) {
      auto [u, ei] = g.adjacent(v)[cursor[v]++];
      if (!seen[u]) {
        seen[u] = 1;
        t.parent_[u] = v;
        t.parent_edge_[u] = g.edges()[ei].c;
        t.children_[v].push_back(u);
        stack.push_back(u);
      }
    } else {
      stack.pop_back();
    }
  }

  t.sub_w_.assign(t.n_, 0);
  t.sub_n_.assign(t.n_, 0);
  for (auto it = t.preorder_.rbegin(); it != t.preorder_.rend(); ++it) {
    int v = *it;
    t.sub_w_[v] += t.w_[v];
    t.sub_n_[v] += 1;
    if (t.parent_[v] >= 0) {
      t.sub_w_[t.parent_[v]] += t.sub_w_[v];
      t.sub_n_[t.parent_[v]] += t.sub_n_[v];
    }
  }
  return t;
}

std::vector<int> RootedTree::subtree_vertices(int v) const {
  std::vector<int> out;
  out.reserve(sub_n_[v]);
  std::vector<int> stack = {v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (auto it = children_[u].rbegin(); it != children_[u].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace isoperim
