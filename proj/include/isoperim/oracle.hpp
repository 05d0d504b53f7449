#pragma once

#include <Eigen/Core>

#include <functional>
#include <span>
#include <vector>

#include "isoperim/cost.hpp"
#include "isoperim/graph.hpp"
#include "isoperim/sparsify.hpp"

namespace isoperim::oracle {

/// Visits every subpartition of {0..n-1} into exactly k parts, as a label
/// vector (0 = outlier, 1..k = part). Parts are numbered in order of first
/// use, which deduplicates relabelings: part j's smallest element is below
/// part j+1's.
void for_each_subpartition(int n, int k, const std::function<void(std::span<const int>)>& fn);

std::vector<Subpartition> enumerate_subpartitions(int n, int k);
long long count_subpartitions(int n, int k);

struct BruteResult {
  double value = 0.0;
  Subpartition parts;
};

/// Exact minimum of the isoperimetry objective (lp aggregate of normalized
/// cuts minus outlier credits) over all exact-k subpartitions. First
/// minimizer in canonical enumeration order.
BruteResult brute_iso(const WeightedGraph& g, int k, Norm norm, std::span<const double> credits = {},
                      bool connected_only = false, int guard = 14);

/// Exact minimum of the robust k-means objective
///   sum_i sum_{x in A_i} ||x - mean(A_i)||^2 + sum_{outliers} penalty(x).
/// Points are rows of `points`.
BruteResult brute_kmeans(const Eigen::MatrixXd& points, int k, std::span<const double> penalties,
                         int guard = 12);

/// Minimum bichromatic edge weight over all side assignments consistent with
/// U, by enumerating the internal nodes' sides (guard bounds their count).
double brute_tree_mincut(const DecompositionTree& t, std::span<const int> u, int guard = 20);

}  // namespace isoperim::oracle
