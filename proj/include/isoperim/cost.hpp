#pragma once

#include <span>
#include <string>
#include <vector>

#include "isoperim/graph.hpp"

namespace isoperim {

/// Which lp norm aggregates the per-part normalized cut values.
/// p=1 uses the plain sum (the objective every identity in this codebase
/// manipulates); p=inf uses the max.
struct Norm {
  double p = 1.0;
  bool inf = false;

  static Norm l1() { return {1.0, false}; }
  static Norm lp(double p) { return {p, false}; }
  static Norm linf() { return {1.0, true}; }

  bool is_one() const { return !inf && p == 1.0; }
  std::string label() const;

  /// Parses "1", "2", "3.5", "inf". Throws InputError otherwise.
  static Norm parse(const std::string& text);
};

struct PartCost {
  double boundary = 0.0;   // c(delta(A_i))
  double potential = 0.0;  // p(A_i)
  long long weight = 0;    // w(A_i)
  double normalized = 0.0; // (boundary + potential) / weight
};

struct CostReport {
  std::vector<PartCost> parts;
  Norm norm;
  double aggregate = 0.0;    // sum for p=1, lp norm for finite p, max for inf
  double credit_term = 0.0;  // total outlier credit collected
  double objective = 0.0;    // aggregate - credit_term
};

/// Aggregate a vector of normalized values under `norm`. Finite p > 1
/// requires nonnegative values.
double aggregate_norm(std::span<const double> values, Norm norm);

/// Full cost accounting for a subpartition; credits may be empty (all zero).
CostReport cost_report(const WeightedGraph& g, const Subpartition& s, Norm norm,
                       std::span<const double> credits = {});

/// lp norm of the k normalized cut values (no credits).
CostReport iso_cost(const WeightedGraph& g, const Subpartition& s, Norm norm);

}  // namespace isoperim
