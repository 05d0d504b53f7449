#include "isoperim/tree_dp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace isoperim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MeanIsoSolver::MeanIsoSolver(const RootedTree& tree, int k_max, SolveOptions opts)
    : tree_(tree), opts_(std::move(opts)), k_cap_(k_max), w_total_(tree.total_weight()) {
  if (tree_.n() == 0) throw InputError("solve on empty tree");
  if (k_cap_ < 1) throw InputError("k must be at least 1");
  if (static_cast<long long>(k_cap_ + 1) * (w_total_ + 1) > (1LL << 26))
    throw InputError("total vertex weight too large for the tree DP; scale weights down");

  const int n = tree_.n();
  credit_.assign(n, 0.0);
  if (!opts_.outlier_credit.empty()) {
    if (static_cast<int>(opts_.outlier_credit.size()) != n)
      throw InputError("outlier_credit must have length n");
    for (int v = 0; v < n; ++v) {
      double c = opts_.outlier_credit[v];
      if (c < 0) throw InputError("outlier credits must be nonnegative");
      credit_[v] = tree_.weight(v) == 0 ? 0.0 : c;
    }
  }

  slot_.assign(n, -1);
  pre_w_.assign(n, {});
  pre_n_.assign(n, {});
  int slots = 0;
  for (int v = 0; v < n; ++v) {
    const auto& ch = tree_.children(v);
    if (ch.empty()) continue;
    slot_[v] = slots;
    slots += static_cast<int>(ch.size());
    pre_w_[v].resize(ch.size() + 1);
    pre_n_[v].resize(ch.size() + 1);
    pre_w_[v][0] = tree_.weight(v);
    pre_n_[v][0] = 1;
    for (size_t i = 0; i < ch.size(); ++i) {
      pre_w_[v][i + 1] = pre_w_[v][i] + tree_.subtree_weight(ch[i]);
      pre_n_[v][i + 1] = pre_n_[v][i] + tree_.subtree_size(ch[i]);
    }
  }
  lanes_.assign(slots, {});
  closed_.assign(static_cast<size_t>(n) * (k_cap_ + 1), ClosedEntry{});
}

long long MeanIsoSolver::branch_weight(int r, int i) const { return pre_w_[r][i]; }
int MeanIsoSolver::branch_size(int r, int i) const { return pre_n_[r][i]; }

double MeanIsoSolver::leaf_value(int u, int k, long long d, long long omega) const {
  if (d == 0) return (k == 0 && omega == 0) ? -credit_[u] : kInf;
  if (k != 1 || omega != tree_.weight(u)) return kInf;
  return (tree_.parent_edge(u) + tree_.potential(u)) / static_cast<double>(d);
}

double MeanIsoSolver::state(int u, int k, long long d, long long omega, bool t) {
  if (k < 0 || k > k_cap_) return kInf;
  if (tree_.is_leaf(u)) return leaf_value(u, k, d, omega);
  return cell_value(u, static_cast<int>(tree_.children(u).size()), k, d, omega, t);
}

double& MeanIsoSolver::cell_ref(int r, int i, int k, long long d, long long omega, bool t) {
  auto& lane_vec = lanes_[slot_[r] + (i - 1)];
  if (lane_vec.empty())
    lane_vec.resize(static_cast<size_t>(k_cap_ + 1) * (w_total_ + 1));
  auto& lane = lane_vec[static_cast<size_t>(k) * (w_total_ + 1) + static_cast<size_t>(d)];
  const size_t width = static_cast<size_t>(branch_weight(r, i)) + 1;
  if (!lane) {
    lane = std::make_unique<double[]>(width * 2);
    std::fill_n(lane.get(), width * 2, std::numeric_limits<double>::quiet_NaN());
  }
  return lane[static_cast<size_t>(omega) * 2 + (t ? 1 : 0)];
}

double MeanIsoSolver::cell_value(int r, int i, int k, long long d, long long omega, bool t) {
  if (k < 0 || k > k_cap_ || k > branch_size(r, i)) return kInf;
  if (omega < 0 || omega > branch_weight(r, i)) return kInf;
  if (d == 0) {
    if (omega != 0) return kInf;
    t = false;
  } else if (k == 0) {
    return kInf;  // the root's open part is one of the k parts
  }
  double& memo = cell_ref(r, i, k, d, omega, t);
  if (!std::isnan(memo)) return memo;
  double value = compute_cell(r, i, k, d, omega, t);
  memo = value;
  return value;
}

double MeanIsoSolver::compute_cell(int r, int i, int k, long long d, long long omega, bool t) {
  const int child = tree_.children(r)[i - 1];
  const double dd = static_cast<double>(d);
  const double edge = tree_.parent_edge(child);  // c(r, v_i)

  if (i == 1) {
    if (d == 0) return -credit_[r] + closed(child, k).value;
    if (!t) {
      // r is in a part by itself within T_{r,1}
      if (omega != tree_.weight(r) || k < 1) return kInf;
      double term = (tree_.parent_edge(r) + edge + tree_.potential(r)) / dd;
      return term + closed(child, k - 1).value;
    }
    // r shares its part with the first child
    long long rest = omega - tree_.weight(r);
    if (rest < 0) return kInf;
    double term = (tree_.parent_edge(r) - edge + tree_.potential(r)) / dd;
    double sub = std::min(state(child, k, d, rest, false), state(child, k, d, rest, true));
    return term + sub;
  }

  if (d == 0) {
    // r is an outlier; split the k parts between T_{r,i-1} and T_{v_i}
    double best = kInf;
    for (int k1 = 0; k1 <= k; ++k1) {
      double a = cell_value(r, i - 1, k1, 0, 0, false);
      if (a == kInf) continue;
      double cand = a + closed(child, k - k1).value;
      if (cand < best) best = cand;
    }
    return best;
  }

  if (!t) {
    // v_i's subtree is disjoint from r's part; the r-v_i edge leaves that part
    double term = edge / dd;
    double best = kInf;
    for (int k1 = 0; k1 <= k; ++k1) {
      double rest = closed(child, k - k1).value;
      if (rest == kInf) continue;
      for (bool t1 : {false, true}) {
        double a = cell_value(r, i - 1, k1, d, omega, t1);
        if (a == kInf) continue;
        double cand = term + (a + rest);
        if (cand < best) best = cand;
      }
    }
    return best;
  }

  // r's part spans both T_{r,i-1} and T_{v_i}; the r-v_i edge is internal to
  // it, but both sub-states charge it (the left one never does, the right one
  // charges it as its root's parent edge), so subtract it once. Merging the
  // two open parts means the part counts of the sub-states overlap by one.
  double term = -(edge / dd);
  double best = kInf;
  const long long lo = std::max<long long>(0, omega - tree_.subtree_weight(child));
  const long long hi = std::min<long long>(omega, branch_weight(r, i - 1));
  for (int k1 = 1; k1 <= k; ++k1) {
    int k2 = k + 1 - k1;
    for (long long o1 = lo; o1 <= hi; ++o1) {
      for (bool t1 : {false, true}) {
        double a = cell_value(r, i - 1, k1, d, o1, t1);
        if (a == kInf) continue;
        for (bool t2 : {false, true}) {
          double b = state(child, k2, d, omega - o1, t2);
          if (b == kInf) continue;
          double cand = term + (a + b);
          if (cand < best) best = cand;
        }
      }
    }
  }
  return best;
}

const MeanIsoSolver::ClosedEntry& MeanIsoSolver::closed(int v, int k) {
  ClosedEntry& entry = closed_[static_cast<size_t>(v) * (k_cap_ + 1) + k];
  if (entry.computed) return entry;
  double best = state(v, k, 0, 0, false);
  long long best_omega = 0;
  bool best_t = false;
  const long long cap = tree_.subtree_weight(v);
  for (long long o = 1; o <= cap; ++o) {
    for (bool tt : {false, true}) {
      double cand = state(v, k, o, o, tt);
      if (cand < best) {
        best = cand;
        best_omega = o;
        best_t = tt;
      }
    }
  }
  entry.value = best;
  entry.omega = best_omega;
  entry.t = best_t;
  entry.computed = true;
  return entry;
}

double MeanIsoSolver::cell(const DpKey& key) {
  if (key.r < 0 || key.r >= tree_.n()) throw InputError("cell: invalid vertex id");
  if (key.k < 0 || key.k > k_cap_) throw InputError("cell: k out of range");
  if (key.d < 0 || key.d > w_total_ || key.omega < 0 || key.omega > w_total_)
    throw InputError("cell: d/omega out of range");
  if (key.d == 0 && key.omega != 0)
    throw InputError("cell: d=0 encodes the root-is-outlier state and needs omega=0");
  if (tree_.is_leaf(key.r)) return leaf_value(key.r, key.k, key.d, key.omega);
  const int nch = static_cast<int>(tree_.children(key.r).size());
  if (key.i < 1 || key.i > nch) throw InputError("cell: child index out of range");
  return cell_value(key.r, key.i, key.k, key.d, key.omega, key.t);
}

MeanIsoResult MeanIsoSolver::solve(int k) {
  if (k <= 0) throw InputError("k must be positive");
  if (k > k_cap_) throw InputError("k exceeds solver capacity");
  if (k > tree_.n()) throw InfeasibleError("k=" + std::to_string(k) + " exceeds vertex count " +
                                           std::to_string(tree_.n()));

  const int root = tree_.root();
  double best = kInf;
  int best_k = -1;
  long long best_omega = 0;
  bool best_t = false;
  auto consider = [&](int kk, long long omega, bool t) {
    double v = state(root, kk, omega == 0 ? 0 : omega, omega, t);
    if (v < best) {
      best = v;
      best_k = kk;
      best_omega = omega;
      best_t = t;
    }
  };
  const int k_lo = opts_.exact_k ? k : 1;
  for (int kk = k_lo; kk <= k; ++kk) {
    consider(kk, 0, false);
    for (long long omega = 1; omega <= w_total_; ++omega)
      for (bool t : {false, true}) consider(kk, omega, t);
  }
  if (best == kInf)
    throw InfeasibleError("no subpartition into " + std::string(opts_.exact_k ? "exactly " : "at most ") +
                          std::to_string(k) + " parts exists for this tree");

  recon_parts_.clear();
  if (best_omega == 0) {
    reconstruct_state(root, best_k, 0, 0, false, -1);
  } else {
    int part = new_part();
    reconstruct_state(root, best_k, best_omega, best_omega, best_t, part);
  }
  if (static_cast<int>(recon_parts_.size()) != best_k)
    throw std::logic_error("tree DP reconstruction produced a wrong part count");

  MeanIsoResult result;
  result.value = best;
  result.parts.parts = std::move(recon_parts_);
  recon_parts_.clear();
  result.parts.sort_ids();
  return result;
}

int MeanIsoSolver::new_part() {
  recon_parts_.emplace_back();
  return static_cast<int>(recon_parts_.size()) - 1;
}

void MeanIsoSolver::expand_closure(int v, int k, const ClosedEntry& entry) {
  if (entry.value == kInf) throw std::logic_error("tree DP reconstruction hit an infeasible closure");
  if (entry.omega == 0) {
    reconstruct_state(v, k, 0, 0, false, -1);
  } else {
    int part = new_part();
    reconstruct_state(v, k, entry.omega, entry.omega, entry.t, part);
  }
}

void MeanIsoSolver::reconstruct_state(int u, int k, long long d, long long omega, bool t, int part) {
  if (tree_.is_leaf(u)) {
    if (d != 0) recon_parts_[part].push_back(u);
    return;
  }
  reconstruct_cell(u, static_cast<int>(tree_.children(u).size()), k, d, omega, t, part);
}

void MeanIsoSolver::reconstruct_cell(int r, int i, int k, long long d, long long omega, bool t,
                                     int part) {
  const double value = cell_value(r, i, k, d, omega, t);
  if (value == kInf) throw std::logic_error("tree DP reconstruction hit an infeasible cell");
  const int child = tree_.children(r)[i - 1];
  const double dd = static_cast<double>(d);
  const double edge = tree_.parent_edge(child);

  if (i == 1) {
    if (d == 0) {
      expand_closure(child, k, closed(child, k));
      return;
    }
    recon_parts_[part].push_back(r);
    if (!t) {
      expand_closure(child, k - 1, closed(child, k - 1));
      return;
    }
    long long rest = omega - tree_.weight(r);
    double f = state(child, k, d, rest, false);
    bool t1 = f <= state(child, k, d, rest, true) ? false : true;
    reconstruct_state(child, k, d, rest, t1, part);
    return;
  }

  if (d == 0) {
    for (int k1 = 0; k1 <= k; ++k1) {
      double a = cell_value(r, i - 1, k1, 0, 0, false);
      if (a == kInf) continue;
      const ClosedEntry& rest = closed(child, k - k1);
      if (rest.value == kInf) continue;
      if (a + rest.value == value) {
        reconstruct_cell(r, i - 1, k1, 0, 0, false, -1);
        expand_closure(child, k - k1, rest);
        return;
      }
    }
    throw std::logic_error("tree DP reconstruction found no matching split (outlier case)");
  }

  if (!t) {
    double term = edge / dd;
    for (int k1 = 0; k1 <= k; ++k1) {
      const ClosedEntry& rest = closed(child, k - k1);
      if (rest.value == kInf) continue;
      for (bool t1 : {false, true}) {
        double a = cell_value(r, i - 1, k1, d, omega, t1);
        if (a == kInf) continue;
        if (term + (a + rest.value) == value) {
          reconstruct_cell(r, i - 1, k1, d, omega, t1, part);
          expand_closure(child, k - k1, rest);
          return;
        }
      }
    }
    throw std::logic_error("tree DP reconstruction found no matching split (separate case)");
  }

  double term = -(edge / dd);
  const long long lo = std::max<long long>(0, omega - tree_.subtree_weight(child));
  const long long hi = std::min<long long>(omega, branch_weight(r, i - 1));
  for (int k1 = 1; k1 <= k; ++k1) {
    int k2 = k + 1 - k1;
    for (long long o1 = lo; o1 <= hi; ++o1) {
      for (bool t1 : {false, true}) {
        double a = cell_value(r, i - 1, k1, d, o1, t1);
        if (a == kInf) continue;
        for (bool t2 : {false, true}) {
          double b = state(child, k2, d, omega - o1, t2);
          if (b == kInf) continue;
          if (term + (a + b) == value) {
            reconstruct_cell(r, i - 1, k1, d, o1, t1, part);
            reconstruct_state(child, k2, d, omega - o1, t2, part);
            return;
          }
        }
      }
    }
  }
  throw std::logic_error("tree DP reconstruction found no matching split (merge case)");
}

MeanIsoResult solve_mean_iso(const RootedTree& tree, int k, const SolveOptions& opts) {
  if (k <= 0) throw InputError("k must be positive");
  if (k > tree.n()) throw InfeasibleError("k=" + std::to_string(k) + " exceeds vertex count " +
                                          std::to_string(tree.n()));
  MeanIsoSolver solver(tree, k, opts);
  return solver.solve(k);
}

}  // namespace isoperim
