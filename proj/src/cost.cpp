#include "isoperim/cost.hpp"

#include <cmath>
#include <cstdio>

namespace isoperim {

std::string Norm::label() const {
  if (inf) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}

Norm Norm::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Norm::linf();
  try {
    size_t pos = 0;
    double p = std::stod(text, &pos);
    if (pos != text.size() || !(p >= 1.0) || !std::isfinite(p))
      throw InputError("norm must be a finite number >= 1 or \"inf\": " + text);
    return Norm::lp(p);
  } catch (const std::invalid_argument&) {
    throw InputError("norm must be a finite number >= 1 or \"inf\": " + text);
  } catch (const std::out_of_range&) {
    throw InputError("norm must be a finite number >= 1 or \"inf\": " + text);
  }
}

double aggregate_norm(std::span<const double> values, Norm norm) {
  if (norm.inf) {
    double best = -std::numeric_limits<double>::infinity();
    for (double v : values) best = std::max(best, v);
    return values.empty() ? 0.0 : best;
  }
  if (norm.p == 1.0) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  double sum = 0.0;
  for (double v : values) {
    if (v < 0)
      throw InputError("lp aggregation with p > 1 requires nonnegative normalized values");
    sum += std::pow(v, norm.p);
  }
  return std::pow(sum, 1.0 / norm.p);
}

CostReport cost_report(const WeightedGraph& g, const Subpartition& s, Norm norm,
                       std::span<const double> credits) {
  if (auto bad = validate_subpartition(g, s)) throw InputError("cost_report: " + *bad);
  if (!credits.empty() && static_cast<int>(credits.size()) != g.n())
    throw InputError("cost_report: credit vector must have length n");

  CostReport report;
  report.norm = norm;
  std::vector<double> normalized;
  normalized.reserve(s.k());
  for (const auto& part : s.parts) {
    PartCost pc;
    pc.boundary = boundary_weight(g, part);
    for (int v : part) {
      pc.weight += g.weight(v);
      pc.potential += g.potential(v);
    }
    if (pc.weight <= 0) throw InputError("cost_report: degenerate part of total weight 0");
    pc.normalized = (pc.boundary + pc.potential) / static_cast<double>(pc.weight);
    normalized.push_back(pc.normalized);
    report.parts.push_back(pc);
  }
  report.aggregate = aggregate_norm(normalized, norm);
  if (!credits.empty())
    for (int v : s.outliers(g.n())) report.credit_term += credits[v];
  report.objective = report.aggregate - report.credit_term;
  return report;
}

CostReport iso_cost(const WeightedGraph& g, const Subpartition& s, Norm norm) {
  return cost_report(g, s, norm);
}

}  // namespace isoperim
