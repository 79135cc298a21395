#pragma once

#include <vector>

#include "hso/graph.hpp"

namespace hso {

/// One edge's contribution to HSO.
struct EdgeTerm {
  Vertex u = 0;
  Vertex v = 0;
  int du = 0;
  int dv = 0;
  double value = 0.0;
};

struct IndexValue {
  double hso = 0.0;
  double so = 0.0;
  std::vector<EdgeTerm> per_edge;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// sqrt(du^2 + dv^2) / min(du, dv). Throws ZeroDegree if either degree is < 1.
double edge_term(int du, int dv);

/// Sum of edge_term over all edges, together with SO and the per-edge terms.
IndexValue hso(const Graph& g);

/// Hyperbolic Sombor index only, without materialising per-edge terms.
double hso_value(const Graph& g);

/// Sombor index: sum over edges of sqrt(du^2 + dv^2).
double so(const Graph& g);

struct TermInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Per-edge interval for an edge with endpoint degrees du, dv in a graph of
/// maximum degree `delta_max`.
///
/// Pendant edge (min = 1 < max): [sqrt 5, sqrt(delta_max^2 + 1)].
/// Non-pendant edge (min >= 2): [sqrt 2, sqrt(delta_max^2 + 4) / 2].
/// Passing n - 1 as `delta_max` gives the order-parameterised variant.
/// Throws DegreeExceedsDelta, ZeroDegree, or K2Edge when both degrees are 1.
TermInterval edge_term_bounds(int du, int dv, int delta_max);

}  // namespace hso
