#include "hso/indices.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hso/error.hpp"

namespace hso {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double edge_term(int du, int dv) {
  if (du < 1 || dv < 1) {
    throw Error(ErrorCode::ZeroDegree,
                "degrees (" + std::to_string(du) + "," + std::to_string(dv) + ") cannot carry an edge");
  }
  const double a = du;
  const double b = dv;
  return std::sqrt(a * a + b * b) / std::min(a, b);
}

IndexValue hso(const Graph& g) {
  IndexValue out;
  CompensatedSum h;
  CompensatedSum s;
  for (auto [u, v] : g.edges()) {
    const int du = g.degree(u);
    const int dv = g.degree(v);
    const double term = edge_term(du, dv);
    h.add(term);
    s.add(std::sqrt(double(du) * du + double(dv) * dv));
    out.per_edge.push_back({u, v, du, dv, term});
  }
  out.hso = h.value();
  out.so = s.value();
  return out;
}

double hso_value(const Graph& g) {
  CompensatedSum h;
  for (int u = 0; u < g.order(); ++u) {
    const std::uint64_t higher = g.row(u) & ~((std::uint64_t{2} << u) - 1);
    for (std::uint64_t r = higher; r; r &= r - 1) h.add(edge_term(g.degree(u), g.degree(std::countr_zero(r))));
  }
  return h.value();
}

double so(const Graph& g) {
  CompensatedSum s;
  for (auto [u, v] : g.edges()) {
    const double du = g.degree(u);
    const double dv = g.degree(v);
    s.add(std::sqrt(du * du + dv * dv));
  }
  return s.value();
}

TermInterval edge_term_bounds(int du, int dv, int delta_max) {
  const int lo = std::min(du, dv);
  const int hi = std::max(du, dv);
  if (lo < 1) throw Error(ErrorCode::ZeroDegree, "edge endpoint of degree 0");
  if (hi > delta_max) {
    throw Error(ErrorCode::DegreeExceedsDelta,
                "degree " + std::to_string(hi) + " exceeds " + std::to_string(delta_max));
  }
  if (hi == 1) throw Error(ErrorCode::K2Edge, "both endpoints pendant; the bound does not apply");
  const double d = delta_max;
  if (lo == 1) return {std::sqrt(5.0), std::sqrt(d * d + 1.0)};
  return {std::sqrt(2.0), std::sqrt(d * d + 4.0) / 2.0};
}

}  // namespace hso
