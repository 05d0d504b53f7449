#include "isoperim/sparsify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoperim/rng.hpp"

namespace isoperim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Best sparsest cut of the cluster by full enumeration; the returned side
// contains the first cluster vertex. Ties go to the lexicographically
// smallest side.
std::vector<int> exact_cut(const std::vector<int>& cluster,
                           const std::vector<std::vector<double>>& adj) {
  const int s = static_cast<int>(cluster.size());
  double best_sparsity = kInf;
  std::vector<int> best_side;
  const std::uint32_t full = (1u << (s - 1)) - 1;
  std::vector<int> side;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    side.clear();
    side.push_back(0);
    for (int j = 1; j < s; ++j)
      if (mask & (1u << (j - 1))) side.push_back(j);
    double cut = 0.0;
    for (int a : side)
      for (int b = 0; b < s; ++b) {
        bool b_in = std::binary_search(side.begin(), side.end(), b);
        if (!b_in) cut += adj[a][b];
      }
    int size_a = static_cast<int>(side.size());
    double sparsity = cut / static_cast<double>(std::min(size_a, s - size_a));
    if (sparsity < best_sparsity ||
        (sparsity == best_sparsity && !best_side.empty() &&
         std::lexicographical_compare(side.begin(), side.end(), best_side.begin(), best_side.end()))) {
      best_sparsity = sparsity;
      best_side = side;
    }
  }
  std::vector<int> out;
  for (int j : best_side) out.push_back(cluster[j]);
  return out;
}

// Sweep cut along the second Laplacian eigenvector, approximated by power
// iteration on a shifted, ones-deflated matrix.
std::vector<int> spectral_cut(const std::vector<int>& cluster,
                              const std::vector<std::vector<double>>& adj, Rng& rng) {
  const int s = static_cast<int>(cluster.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      if (a != b) {
        lap(a, b) = -adj[a][b];
        lap(a, a) += adj[a][b];
      }
  double shift = 1.0;
  for (int a = 0; a < s; ++a) shift = std::max(shift, 2.0 * lap(a, a) + 1.0);
  Eigen::MatrixXd m = shift * Eigen::MatrixXd::Identity(s, s) - lap;

  Eigen::VectorXd x(s);
  for (int a = 0; a < s; ++a) x(a) = rng.next_unit() - 0.5;
  auto deflate = [&](Eigen::VectorXd& v) { v.array() -= v.mean(); };
  deflate(x);
  if (x.norm() < 1e-12) x(0) += 1.0, deflate(x);
  x.normalize();
  for (int it = 0; it < 1000; ++it) {
    Eigen::VectorXd y = m * x;
    deflate(y);
    double norm = y.norm();
    if (norm < 1e-14) break;
    y /= norm;
    double mu = y.dot(m * y);
    double residual = (m * y - mu * y).norm();
    x = y;
    if (residual <= 1e-10) break;
  }

  std::vector<int> order(s);
  for (int a = 0; a < s; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x(a) != x(b)) return x(a) < x(b);
    return a < b;
  });

  std::vector<char> in_prefix(s, 0);
  double cut = 0.0;
  double best_sparsity = kInf;
  int best_prefix = 1;
  for (int j = 0; j < s - 1; ++j) {
    int v = order[j];
    for (int b = 0; b < s; ++b)
      if (b != v) cut += in_prefix[b] ? -adj[v][b] : adj[v][b];
    in_prefix[v] = 1;
    double sparsity = cut / static_cast<double>(std::min(j + 1, s - j - 1));
    if (sparsity < best_sparsity) {
      best_sparsity = sparsity;
      best_prefix = j + 1;
    }
  }
  std::vector<int> side;
  for (int j = 0; j < best_prefix; ++j) side.push_back(cluster[order[j]]);
  std::sort(side.begin(), side.end());
  // canonical: the returned side is the one containing the smallest vertex
  if (side[0] != cluster[0]) {
    std::vector<int> other;
    std::set_difference(cluster.begin(), cluster.end(), side.begin(), side.end(),
                        std::back_inserter(other));
    return other;
  }
  return side;
}

struct Builder {
  const WeightedGraph& structure;
  const WeightedGraph& costs;
  HstStrategy strategy;
  Rng rng;
  std::vector<int> parent;
  std::vector<double> up_w;
  std::vector<std::vector<int>> children;

  int build(const std::vector<int>& cluster, int parent_node) {
    int node;
    if (cluster.size() == 1) {
      node = cluster[0];
    } else {
      node = static_cast<int>(parent.size());
      parent.push_back(-1);
      up_w.push_back(0.0);
      children.emplace_back();
    }
    parent[node] = parent_node;
    up_w[node] = parent_node < 0 ? 0.0 : boundary_weight(costs, cluster);
    if (cluster.size() == 1) return node;

    std::vector<std::vector<double>> adj(cluster.size(),
                                         std::vector<double>(cluster.size(), 0.0));
    {
      std::vector<int> local(structure.n(), -1);
      for (size_t j = 0; j < cluster.size(); ++j) local[cluster[j]] = static_cast<int>(j);
      for (const Edge& e : structure.edges()) {
        int a = local[e.u], b = local[e.v];
        if (a >= 0 && b >= 0) {
          adj[a][b] += e.c;
          adj[b][a] += e.c;
        }
      }
    }
    bool exact = strategy == HstStrategy::ExactSparsestCut && cluster.size() <= 16;
    std::vector<int> side_a =
        exact ? exact_cut(cluster, adj) : spectral_cut(cluster, adj, rng);
    std::vector<int> side_b;
    std::set_difference(cluster.begin(), cluster.end(), side_a.begin(), side_a.end(),
                        std::back_inserter(side_b));
    int ca = build(side_a, node);
    children[node].push_back(ca);
    int cb = build(side_b, node);
    children[node].push_back(cb);
    return node;
  }
};

}  // namespace

DecompositionTree build_hst_with_costs(const WeightedGraph& structure, const WeightedGraph& costs,
                                       HstStrategy strategy, std::uint64_t seed) {
  if (structure.n() == 0) throw InputError("build_hst: empty graph");
  if (structure.n() != costs.n()) throw InputError("build_hst: structure/cost vertex mismatch");
  if (!structure.connected())
    throw InputError("build_hst: graph is disconnected; decompose it into connected components "
                     "and solve each with its own k");

  Builder b{structure, costs, strategy, Rng(seed), {}, {}, {}};
  const int n = structure.n();
  b.parent.assign(n, -1);
  b.up_w.assign(n, 0.0);
  b.children.assign(n, {});
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  int root = b.build(all, -1);

  DecompositionTree t;
  t.n_graph_ = n;
  t.root_ = root;
  t.parent_ = std::move(b.parent);
  t.up_w_ = std::move(b.up_w);
  t.children_ = std::move(b.children);
  t.leaf_potential_.resize(n);
  for (int v = 0; v < n; ++v) t.leaf_potential_[v] = costs.potential(v);

  // children-before-parents order for the mincut DP
  t.postorder_.reserve(t.node_count());
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    t.postorder_.push_back(v);
    for (int c : t.children_[v]) stack.push_back(c);
  }
  std::reverse(t.postorder_.begin(), t.postorder_.end());
  return t;
}

DecompositionTree build_hst(const WeightedGraph& g, HstStrategy strategy, std::uint64_t seed) {
  if (g.is_signed())
    throw InputError("build_hst: signed graphs have no cut lower bound; clamp the weights first");
  return build_hst_with_costs(g, g, strategy, seed);
}

std::vector<int> DecompositionTree::cluster(int node) const {
  std::vector<int> leaves;
  std::vector<int> stack = {node};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (is_leaf(v))
      leaves.push_back(v);
    else
      for (int c : children_[v]) stack.push_back(c);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

RootedTree DecompositionTree::to_rooted_tree() const {
  const int m = node_count();
  std::vector<Edge> edges;
  edges.reserve(m - 1);
  // parent -> child in children order, walking parents in preorder
  for (auto it = postorder_.rbegin(); it != postorder_.rend(); ++it)
    for (int c : children_[*it]) edges.push_back({*it, c, up_w_[c]});
  std::vector<long long> w(m);
  std::vector<double> p(m);
  for (int node = 0; node < m; ++node) {
    w[node] = node_weight(node);
    p[node] = node_potential(node);
  }
  WeightedGraph g(m, std::move(edges), std::move(w), std::move(p), /*is_signed=*/true,
                  /*min_vertex_weight=*/0);
  return root_tree(g, root_);
}

double tree_mincut(const DecompositionTree& t, std::span<const int> u) {
  const int n = t.graph_n();
  std::vector<char> in_u(n, 0);
  int count = 0;
  for (int v : u) {
    if (v < 0 || v >= n) throw InputError("tree_mincut: invalid graph vertex id");
    if (!in_u[v]) {
      in_u[v] = 1;
      ++count;
    }
  }
  if (count == 0 || count == n)
    throw InputError("tree_mincut: U must be a nonempty proper subset of the leaves");

  const int m = t.node_count();
  std::vector<std::array<double, 2>> dp(m);
  for (int node : t.postorder()) {
    std::array<double, 2> cost = {0.0, 0.0};
    if (t.is_leaf(node)) {
      int forced = in_u[node] ? 0 : 1;
      cost[forced] = 0.0;
      cost[1 - forced] = kInf;
    } else {
      for (int c : t.children(node))
        for (int s = 0; s < 2; ++s)
          cost[s] += std::min(dp[c][s], dp[c][1 - s] + t.up_weight(c));
    }
    dp[node] = cost;
  }
  return std::min(dp[t.root()][0], dp[t.root()][1]);
}

namespace {

StretchReport make_report(std::vector<double> ratios) {
  StretchReport rep;
  rep.samples = static_cast<long long>(ratios.size());
  if (ratios.empty()) return rep;
  double sum = 0.0;
  rep.max_ratio = -kInf;
  for (double r : ratios) {
    sum += r;
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.mean_ratio = sum / static_cast<double>(ratios.size());
  const double edges[] = {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 16.0, kInf};
  for (double e : edges) rep.histogram.push_back({e, 0});
  for (double r : ratios)
    for (auto& bucket : rep.histogram)
      if (r <= bucket.upper) {
        ++bucket.count;
        break;
      }
  return rep;
}

double stretch_ratio(const WeightedGraph& g, const DecompositionTree& t,
                     const std::vector<int>& u) {
  double denom = boundary_weight(g, u);
  double num = tree_mincut(t, u);
  if (denom == 0.0) return num == 0.0 ? 1.0 : kInf;
  return num / denom;
}

}  // namespace

StretchReport stretch_report_exhaustive(const WeightedGraph& g, const DecompositionTree& t) {
  const int n = g.n();
  if (n > 14) throw InputError("exhaustive stretch report is limited to n <= 14");
  if (n < 2) throw InputError("stretch report needs at least two vertices");
  std::vector<double> ratios;
  std::vector<int> u;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    u.clear();
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) u.push_back(v);
    ratios.push_back(stretch_ratio(g, t, u));
  }
  return make_report(std::move(ratios));
}

StretchReport stretch_report_sampled(const WeightedGraph& g, const DecompositionTree& t,
                                     int samples, std::uint64_t seed) {
  const int n = g.n();
  if (n < 2) throw InputError("stretch report needs at least two vertices");
  if (samples <= 0) throw InputError("sample count must be positive");
  Rng rng(seed);
  std::vector<double> ratios;
  ratios.reserve(samples);
  std::vector<int> u;
  for (int s = 0; s < samples; ++s) {
    u.clear();
    // uniform over nonempty proper subsets via rejection
    for (;;) {
      u.clear();
      for (int v = 0; v < n; ++v)
        if (rng.next_bool()) u.push_back(v);
      if (!u.empty() && static_cast<int>(u.size()) < n) break;
    }
    ratios.push_back(stretch_ratio(g, t, u));
  }
  return make_report(std::move(ratios));
}

Subpartition map_tree_solution(const DecompositionTree& t, const Subpartition& tree_parts) {
  Subpartition out;
  std::vector<char> seen(t.graph_n(), 0);
  for (const auto& part : tree_parts.parts) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> vertices;
    for (int node : part) {
      if (node < 0 || node >= t.node_count())
        throw InputError("map_tree_solution: invalid tree node id");
      for (int leaf : t.cluster(node))
        if (!seen[leaf]) {
          seen[leaf] = 1;
          vertices.push_back(leaf);
        }
    }
    if (vertices.empty())
      throw InputError("map_tree_solution: a part holds no leaves and maps to an empty set");
    std::sort(vertices.begin(), vertices.end());
    out.parts.push_back(std::move(vertices));
  }
  return out;
}

}  // namespace isoperim
