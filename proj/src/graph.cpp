#include "isoperim/graph.hpp"

#include <set>
#include <utility>

namespace isoperim {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::vector<long long> vertex_weights,
                             std::vector<double> potentials, bool is_signed,
                             long long min_vertex_weight)
    : n_(n), signed_(is_signed), edges_(std::move(edges)), w_(std::move(vertex_weights)),
      p_(std::move(potentials)) {
  if (n_ < 0) throw InputError("vertex count must be nonnegative");
  if (static_cast<int>(w_.size()) != n_ || static_cast<int>(p_.size()) != n_)
    throw InputError("vertex weight/potential arrays must have length n");
  for (int v = 0; v < n_; ++v) {
    if (w_[v] < min_vertex_weight)
      throw InputError("vertex " + std::to_string(v) + " has weight " + std::to_string(w_[v]) +
                       " < " + std::to_string(min_vertex_weight));
    total_w_ += w_[v];
  }
  adj_.assign(n_, {});
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!signed_ && e.c < 0)
      throw InputError("negative edge weight on unsigned graph; set \"signed\": true");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw InputError("duplicate edge (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ")");
    adj_[e.u].emplace_back(e.v, i);
    adj_[e.v].emplace_back(e.u, i);
  }
}

WeightedGraph WeightedGraph::unit(int n, std::vector<Edge> edges, bool is_signed) {
  return WeightedGraph(n, std::move(edges), std::vector<long long>(n, 1),
                       std::vector<double>(n, 0.0), is_signed);
}

bool WeightedGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, ei] : adj_[v]) {
      (void)ei;
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

bool WeightedGraph::is_tree() const {
  return static_cast<int>(edges_.size()) == n_ - 1 && connected();
}

std::vector<int> Subpartition::outliers(int n) const {
  std::vector<char> in(n, 0);
  for (const auto& part : parts)
    for (int v : part) in[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

std::vector<int> Subpartition::labels(int n) const {
  std::vector<int> lab(n, -1);
  for (int i = 0; i < k(); ++i)
    for (int v : parts[i]) lab[v] = i;
  return lab;
}

void Subpartition::sort_ids() {
  for (auto& part : parts) std::sort(part.begin(), part.end());
}

double boundary_weight(const WeightedGraph& g, std::span<const int> u) {
  std::vector<char> in(g.n(), 0);
  for (int v : u) {
    if (v < 0 || v >= g.n()) throw InputError("boundary_weight: invalid vertex id " + std::to_string(v));
    in[v] = 1;
  }
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) total += e.c;
  return total;
}

double normalized_cut(const WeightedGraph& g, std::span<const int> u) {
  if (u.empty()) throw InputError("normalized_cut: empty vertex set");
  double boundary = boundary_weight(g, u);
  long long weight = 0;
  double pot = 0.0;
  for (int v : u) {
    weight += g.weight(v);
    pot += g.potential(v);
  }
  if (weight <= 0) throw InputError("normalized_cut: degenerate part of total weight 0");
  return (boundary + pot) / static_cast<double>(weight);
}

std::optional<std::string> validate_subpartition(const WeightedGraph& g, const Subpartition& s) {
  std::vector<char> used(g.n(), 0);
  for (int i = 0; i < s.k(); ++i) {
    if (s.parts[i].empty()) return "part " + std::to_string(i) + " is empty";
    for (int v : s.parts[i]) {
      if (v < 0 || v >= g.n())
        return "part " + std::to_string(i) + " contains invalid vertex id " + std::to_string(v);
      if (used[v])
        return "vertex " + std::to_string(v) + " appears in more than one part";
      used[v] = 1;
    }
  }
  return std::nullopt;
}

std::vector<bool> parts_connected(const WeightedGraph& g, const Subpartition& s) {
  if (auto bad = validate_subpartition(g, s)) throw InputError("parts_connected: " + *bad);
  std::vector<bool> result(s.k(), false);
  std::vector<int> label = s.labels(g.n());
  for (int i = 0; i < s.k(); ++i) {
    const auto& part = s.parts[i];
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack = {part[0]};
    seen[part[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, ei] : g.adjacent(v)) {
        (void)ei;
        if (label[u] == i && !seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    result[i] = reached == static_cast<int>(part.size());
  }
  return result;
}

}  // namespace isoperim
