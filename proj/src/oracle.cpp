#include "isoperim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace isoperim::oracle {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void enumerate_rec(int n, int k, int v, int used, std::vector<int>& label,
                   const std::function<void(std::span<const int>)>& fn) {
  if (v == n) {
    if (used == k) fn(label);
    return;
  }
  // not enough vertices left to open the remaining parts?
  const int remaining = n - v;
  for (int choice = 0; choice <= std::min(used + 1, k); ++choice) {
    int next_used = std::max(used, choice);
    if (k - next_used > remaining - 1) continue;
    label[v] = choice;
    enumerate_rec(n, k, v + 1, next_used, label, fn);
  }
  label[v] = 0;
}

Subpartition labels_to_parts(std::span<const int> label, int k) {
  Subpartition s;
  s.parts.assign(k, {});
  for (int v = 0; v < static_cast<int>(label.size()); ++v)
    if (label[v] > 0) s.parts[label[v] - 1].push_back(v);
  return s;
}

}  // namespace

void for_each_subpartition(int n, int k, const std::function<void(std::span<const int>)>& fn) {
  if (n < 0 || k < 0) throw InputError("for_each_subpartition: negative arguments");
  if (k > n || k == 0) return;
  std::vector<int> label(n, 0);
  enumerate_rec(n, k, 0, 0, label, fn);
}

std::vector<Subpartition> enumerate_subpartitions(int n, int k) {
  std::vector<Subpartition> out;
  for_each_subpartition(n, k, [&](std::span<const int> label) {
    out.push_back(labels_to_parts(label, k));
  });
  return out;
}

long long count_subpartitions(int n, int k) {
  long long count = 0;
  for_each_subpartition(n, k, [&](std::span<const int>) { ++count; });
  return count;
}

namespace {

struct IsoSearch {
  const WeightedGraph& g;
  int n, k;
  Norm norm;
  std::span<const double> credits;
  bool connected_only;

  std::vector<int> label;
  std::vector<double> cut, pot;
  std::vector<long long> wsum;
  double credit_sum = 0.0;
  double best = kInf;
  std::vector<int> best_label;
  std::vector<double> normalized;

  void run() {
    label.assign(n, 0);
    cut.assign(k + 1, 0.0);
    pot.assign(k + 1, 0.0);
    wsum.assign(k + 1, 0);
    normalized.resize(k);
    recurse(0, 0);
  }

  bool connected_ok() const {
    Subpartition s = labels_to_parts(label, k);
    for (bool ok : parts_connected(g, s))
      if (!ok) return false;
    return true;
  }

  void leaf() {
    for (int i = 1; i <= k; ++i)
      if (wsum[i] < 1) return;
    if (connected_only && !connected_ok()) return;
    for (int i = 1; i <= k; ++i)
      normalized[i - 1] = (cut[i] + pot[i]) / static_cast<double>(wsum[i]);
    double value = aggregate_norm(normalized, norm) - credit_sum;
    if (value < best) {
      best = value;
      best_label = label;
    }
  }

  void apply(int v, int choice, double sign) {
    for (auto [u, ei] : g.adjacent(v)) {
      if (u >= v) continue;
      double c = sign * g.edges()[ei].c;
      if (choice > 0 && label[u] != choice) cut[choice] += c;
      if (label[u] > 0 && label[u] != choice) cut[label[u]] += c;
    }
    if (choice > 0) {
      pot[choice] += sign * g.potential(v);
      wsum[choice] += static_cast<long long>(sign) * g.weight(v);
    } else if (!credits.empty()) {
      credit_sum += sign * credits[v];
    }
  }

  void recurse(int v, int used) {
    if (v == n) {
      if (used == k) leaf();
      return;
    }
    const int remaining = n - v;
    for (int choice = 0; choice <= std::min(used + 1, k); ++choice) {
      int next_used = std::max(used, choice);
      if (k - next_used > remaining - 1) continue;
      label[v] = choice;
      apply(v, choice, 1.0);
      recurse(v + 1, next_used);
      apply(v, choice, -1.0);
      label[v] = 0;
    }
  }
};

}  // namespace

BruteResult brute_iso(const WeightedGraph& g, int k, Norm norm, std::span<const double> credits,
                      bool connected_only, int guard) {
  if (g.n() > guard)
    throw InputError("brute_iso refuses n=" + std::to_string(g.n()) + " (guard " +
                     std::to_string(guard) + "); use the tree or pipeline solvers");
  if (k <= 0) throw InputError("k must be positive");
  if (k > g.n()) throw InfeasibleError("k exceeds vertex count");
  if (!credits.empty() && static_cast<int>(credits.size()) != g.n())
    throw InputError("credit vector must have length n");

  IsoSearch search{g, g.n(), k, norm, credits, connected_only, {}, {}, {}, {}, 0.0,
                   kInf,     {}, {}};
  search.run();
  if (search.best == kInf)
    throw InfeasibleError("no subpartition into exactly " + std::to_string(k) + " parts");
  BruteResult result;
  result.value = search.best;
  result.parts = labels_to_parts(search.best_label, k);
  return result;
}

namespace {

struct KmeansSearch {
  const Eigen::MatrixXd& points;
  std::span<const double> penalties;
  int n, k;

  std::vector<int> label;
  std::vector<Eigen::VectorXd> sum;
  std::vector<double> sumsq;
  std::vector<int> cnt;
  double penalty_sum = 0.0;
  double best = kInf;
  std::vector<int> best_label;

  void run() {
    label.assign(n, 0);
    sum.assign(k + 1, Eigen::VectorXd::Zero(points.cols()));
    sumsq.assign(k + 1, 0.0);
    cnt.assign(k + 1, 0);
    recurse(0, 0);
  }

  void leaf() {
    double value = penalty_sum;
    for (int i = 1; i <= k; ++i) {
      if (cnt[i] == 0) return;
      value += sumsq[i] - sum[i].squaredNorm() / static_cast<double>(cnt[i]);
    }
    if (value < best) {
      best = value;
      best_label = label;
    }
  }

  void recurse(int v, int used) {
    if (v == n) {
      if (used == k) leaf();
      return;
    }
    const int remaining = n - v;
    for (int choice = 0; choice <= std::min(used + 1, k); ++choice) {
      int next_used = std::max(used, choice);
      if (k - next_used > remaining - 1) continue;
      label[v] = choice;
      if (choice > 0) {
        sum[choice] += points.row(v).transpose();
        sumsq[choice] += points.row(v).squaredNorm();
        ++cnt[choice];
      } else {
        penalty_sum += penalties[v];
      }
      recurse(v + 1, next_used);
      if (choice > 0) {
        sum[choice] -= points.row(v).transpose();
        sumsq[choice] -= points.row(v).squaredNorm();
        --cnt[choice];
      } else {
        penalty_sum -= penalties[v];
      }
      label[v] = 0;
    }
  }
};

}  // namespace

BruteResult brute_kmeans(const Eigen::MatrixXd& points, int k, std::span<const double> penalties,
                         int guard) {
  const int n = static_cast<int>(points.rows());
  if (n > guard)
    throw InputError("brute_kmeans refuses n=" + std::to_string(n) + " (guard " +
                     std::to_string(guard) + ")");
  if (k <= 0) throw InputError("k must be positive");
  if (k > n) throw InfeasibleError("k exceeds point count");
  if (static_cast<int>(penalties.size()) != n)
    throw InputError("penalty vector must have length n");

  KmeansSearch search{points, penalties, n, k, {}, {}, {}, {}, 0.0, kInf, {}};
  search.run();
  BruteResult result;
  result.value = search.best;
  result.parts = labels_to_parts(search.best_label, k);
  return result;
}

double brute_tree_mincut(const DecompositionTree& t, std::span<const int> u, int guard) {
  const int n = t.graph_n();
  const int m = t.node_count();
  const int internal = m - n;
  if (internal > guard)
    throw InputError("brute_tree_mincut refuses " + std::to_string(internal) +
                     " free internal nodes (guard " + std::to_string(guard) + ")");

  std::vector<char> in_u(n, 0);
  int count = 0;
  for (int v : u) {
    if (v < 0 || v >= n) throw InputError("brute_tree_mincut: invalid vertex id");
    if (!in_u[v]) {
      in_u[v] = 1;
      ++count;
    }
  }
  if (count == 0 || count == n)
    throw InputError("brute_tree_mincut: U must be a nonempty proper subset");

  std::vector<char> side(m, 0);
  for (int v = 0; v < n; ++v) side[v] = in_u[v] ? 0 : 1;

  auto edge_cost = [&](int node) {
    int p = t.parent(node);
    return (p >= 0 && side[node] != side[p]) ? t.up_weight(node) : 0.0;
  };
  double cost = 0.0;
  for (int node = 0; node < m; ++node) cost += edge_cost(node);
  double best = cost;

  // Gray-code walk over internal node sides; each step flips one node.
  const std::uint64_t total = 1ull << internal;
  for (std::uint64_t step = 1; step < total; ++step) {
    int bit = std::countr_zero(step);
    int node = n + bit;
    cost -= edge_cost(node);
    for (int c : t.children(node))
      cost -= edge_cost(c);
    side[node] ^= 1;
    cost += edge_cost(node);
    for (int c : t.children(node))
      cost += edge_cost(c);
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace isoperim::oracle
