#pragma once

#include <span>
#include <vector>

#include "isoperim/cost.hpp"
#include "isoperim/rooted_tree.hpp"

namespace isoperim {

struct LpResult {
  double value = 0.0;  // lp norm scale (p-th root of the internal power sum)
  Subpartition parts;
  int outliers_used = 0;
};

/// Exact lp isoperimetry on trees with nonnegative integer edge weights and
/// zero potentials. Minimizes the lp norm of the normalized cut values over
/// subpartitions into exactly k parts whose outlier count is at most
/// `max_outliers` (< 0 means n). Pseudopolynomial: the state space tracks the
/// exact cut cost of the part containing the current subtree root.
LpResult solve_lp_iso(const RootedTree& tree, int k, Norm norm, int max_outliers = -1);

/// Edge weights rounded down to powers of a base (N^(1/l) or 1+eps).
struct RoundedWeights {
  double base = 1.0;
  double max_weight = 1.0;              // N
  std::vector<double> original;
  std::vector<double> rounded;
  std::vector<int> symbol;              // index into `values` per weight
  std::vector<double> values;           // distinct powers <= N, ascending
  double next_power = 1.0;              // first power > N (for the b*c' bound)

  /// All sums of at most `max_terms` values (with repetition), ascending.
  std::vector<double> achievable_sums(int max_terms) const;
};

/// Largest power of N^(1/l) not exceeding each weight. Weights must be >= 1.
RoundedWeights round_weights_powers(std::span<const double> weights, int l);

/// Largest power of 1+eps not exceeding each weight. Weights must be >= 1.
RoundedWeights round_weights_eps(std::span<const double> weights, double eps);

struct Rounding {
  enum class Mode { Powers, Eps } mode = Mode::Powers;
  int l = 1;
  double eps = 1.0;

  static Rounding powers(int l) { return {Mode::Powers, l, 0.0}; }
  static Rounding one_plus_eps(double eps) { return {Mode::Eps, 0, eps}; }
};

struct RoundedResult {
  double value = 0.0;          // objective of `parts` under the original weights
  double rounded_value = 0.0;  // optimal objective under the rounded weights
  Subpartition parts;
  RoundedWeights rounding;     // over parent-edge weights in vertex id order (root skipped)
};

/// Rounds the tree's edge weights, solves exactly on the rounded instance
/// (cut costs restricted to sums of the rounded values), and re-evaluates the
/// winning subpartition under the original weights.
RoundedResult solve_rounded(const RootedTree& tree, int k, Norm norm, const Rounding& rounding,
                            int max_outliers = -1);

}  // namespace isoperim
