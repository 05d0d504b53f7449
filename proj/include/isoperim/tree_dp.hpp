#pragma once

#include <memory>
#include <vector>

#include "isoperim/cost.hpp"
#include "isoperim/rooted_tree.hpp"

namespace isoperim {

struct SolveOptions {
  /// Nonnegative reward collected per outlier vertex. Empty means all zero.
  /// Weight-0 vertices always get credit 0 (they may sit outside every part
  /// for free, so rewarding them would be unbounded nonsense).
  std::vector<double> outlier_credit;
  /// true: exactly k parts. false: best over k' <= k.
  bool exact_k = true;
};

/// State of the mean-isoperimetry recursion on the subtree that keeps the
/// first `i` children of `r`:
///   k     parts inside that subtree (the root's open part counts as one),
///   d     divisor for the root part's boundary-plus-potential charge, equal
///         to the eventual total weight of that part,
///   omega weight of the root part restricted to this subtree,
///   t     whether r shares its part with child i.
/// d == 0 and omega == 0 encode "r is an outlier" (then t is canonically
/// false). omega == 0 with d >= 1 is a legitimate open part made of weight-0
/// vertices so far.
struct DpKey {
  int r = 0;
  int i = 1;
  int k = 0;
  long long d = 0;
  long long omega = 0;
  bool t = false;
};

struct MeanIsoResult {
  double value = 0.0;
  Subpartition parts;
};

/// Exact solver for mean isoperimetry on weighted trees, with vertex weights,
/// vertex potentials and per-vertex outlier credits. One instance per solve;
/// the tree itself is shared read-only.
class MeanIsoSolver {
public:
  /// `k_max` bounds the k argument of later solve()/cell() calls.
  MeanIsoSolver(const RootedTree& tree, int k_max, SolveOptions opts = {});

  /// Minimum of sum_i (c(delta(A_i)) + p(A_i)) / w(A_i) - sum_{outliers} credit
  /// over subpartitions into exactly k parts (or up to k with exact_k=false),
  /// together with an attaining subpartition.
  MeanIsoResult solve(int k);

  /// Memoized value of one recursion state; exposed for tests.
  double cell(const DpKey& key);

private:
  struct ClosedEntry {
    double value = 0.0;
    long long omega = 0;
    bool t = false;
    bool computed = false;
  };

  double state(int u, int k, long long d, long long omega, bool t);
  double leaf_value(int u, int k, long long d, long long omega) const;
  double cell_value(int r, int i, int k, long long d, long long omega, bool t);
  double compute_cell(int r, int i, int k, long long d, long long omega, bool t);
  const ClosedEntry& closed(int v, int k);
  double& cell_ref(int r, int i, int k, long long d, long long omega, bool t);
  long long branch_weight(int r, int i) const;  // weight of T_{r,i}
  int branch_size(int r, int i) const;

  void reconstruct_state(int u, int k, long long d, long long omega, bool t, int part);
  void reconstruct_cell(int r, int i, int k, long long d, long long omega, bool t, int part);
  void expand_closure(int v, int k, const ClosedEntry& entry);
  int new_part();

  const RootedTree& tree_;
  SolveOptions opts_;
  std::vector<double> credit_;
  int k_cap_;
  long long w_total_;
  std::vector<int> slot_;                    // vertex -> first (r,i) slot, -1 for leaves
  std::vector<std::vector<long long>> pre_w_;  // per vertex: weight of T_{r,i}, i=1..nch
  std::vector<std::vector<int>> pre_n_;
  // memo lanes: per slot and (k,d), values indexed by (omega, t); NaN = unset
  std::vector<std::vector<std::unique_ptr<double[]>>> lanes_;
  std::vector<ClosedEntry> closed_;
  std::vector<std::vector<int>> recon_parts_;
};

MeanIsoResult solve_mean_iso(const RootedTree& tree, int k, const SolveOptions& opts = {});

}  // namespace isoperim
