#include "hso/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hso/canonical.hpp"
#include "hso/error.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"

namespace hso {

double Tolerance::slack(double bound) const { return rel * std::max(1.0, std::fabs(bound)); }

bool Tolerance::equal(double value, double bound) const { return std::fabs(value - bound) <= slack(bound); }

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::Sandwich: return "sandwich";
    case Theorem::TreeBounds: return "tree-bounds";
    case Theorem::GeneralLower: return "general-lower";
    case Theorem::UnicyclicBounds: return "unicyclic-bounds";
    case Theorem::BicyclicLower: return "bicyclic-lower";
    case Theorem::BicyclicUpper: return "bicyclic-upper";
    case Theorem::EdgeCountBounds: return "edge-count-bounds";
    case Theorem::LemmaEdgeBounds: return "lemma-edge-bounds";
    case Theorem::FMonotone: return "f-monotone";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (auto t : {Theorem::Sandwich, Theorem::TreeBounds, Theorem::GeneralLower, Theorem::UnicyclicBounds,
                 Theorem::BicyclicLower, Theorem::BicyclicUpper, Theorem::EdgeCountBounds,
                 Theorem::LemmaEdgeBounds, Theorem::FMonotone}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorCode::UnknownTheorem, "'" + std::string(name) + "'");
}

std::string StructuralClass::to_string() const {
  switch (kind) {
    case StructuralKind::None: return "None";
    case StructuralKind::Regular: return "Regular";
    case StructuralKind::GammaMember: return "GammaMember";
    case StructuralKind::ExtremalFamilyMatch: {
      std::string s = "ExtremalFamilyMatch(";
      for (std::size_t i = 0; i < families.size(); ++i) {
        if (i) s.push_back('|');
        s += hso::to_string(families[i]);
      }
      return s + ")";
    }
  }
  return "None";
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, to_graph6(g));
}

void require_order(const Graph& g, int lo) {
  if (g.order() < lo) {
    throw Error(ErrorCode::OrderTooSmall, "needs n >= " + std::to_string(lo) + ", got " + std::to_string(g.order()));
  }
}

TheoremReport start(Theorem theorem, const Graph& g) {
  TheoremReport r;
  r.theorem = theorem;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.value = hso_value(g);
  return r;
}

// Fills holds and equality flags from the bounds already set on r.
void apply_bounds(TheoremReport& r, Tolerance tol) {
  r.holds = true;
  if (r.bound_lower) {
    r.holds = r.holds && tol.at_least(r.value, *r.bound_lower);
    r.equality_lower = tol.equal(r.value, *r.bound_lower);
  }
  if (r.bound_upper) {
    r.holds = r.holds && tol.at_most(r.value, *r.bound_upper);
    r.equality_upper = tol.equal(r.value, *r.bound_upper);
  }
}

StructuralClass degree_structure(const Graph& g) {
  if (g.is_regular()) return {StructuralKind::Regular, {}};
  if (is_gamma_member(g)) return {StructuralKind::GammaMember, {}};
  return {};
}

void add_family(StructuralClass& s, FamilyKind kind) {
  s.kind = StructuralKind::ExtremalFamilyMatch;
  if (std::find(s.families.begin(), s.families.end(), kind) == s.families.end()) s.families.push_back(kind);
}

bool matches_any(const Graph& g, FamilyKind kind) {
  for (const auto& spec : family_members(kind, g.order())) {
    if (is_isomorphic_to(g, spec)) return true;
  }
  return false;
}

}  // namespace

bool is_gamma_member(const Graph& g) {
  require_connected(g);
  const int delta = g.min_degree();
  if (g.max_degree() == delta) return false;
  for (auto [u, v] : g.edges()) {
    if (std::min(g.degree(u), g.degree(v)) != delta) return false;
  }
  return true;
}

bool is_isomorphic_to(const Graph& g, const FamilySpec& spec) {
  if (g.order() != spec.n) return false;
  return are_isomorphic(g, build(spec));
}

TheoremReport check_sandwich(const Graph& g, Tolerance tol) {
  require_connected(g);
  require_order(g, 2);
  TheoremReport r = start(Theorem::Sandwich, g);
  const double s = so(g);
  r.bound_lower = s / g.max_degree();
  r.bound_upper = s / g.min_degree();
  apply_bounds(r, tol);
  r.structural = degree_structure(g);
  const bool regular = r.structural.kind == StructuralKind::Regular;
  const bool gamma = r.structural.kind == StructuralKind::GammaMember;
  r.consistent = (r.equality_lower == regular) && (r.equality_upper == (regular || gamma));
  return r;
}

TheoremReport check_tree_bounds(const Graph& t, Tolerance tol) {
  if (classify(t) != GraphClass::Tree) throw Error(ErrorCode::NotATree, to_graph6(t));
  require_order(t, 3);
  TheoremReport r = start(Theorem::TreeBounds, t);
  const auto b = closed_form_bound(BoundTheorem::TreeBounds, t.order());
  r.bound_lower = b.lower;
  r.bound_upper = b.upper;
  apply_bounds(r, tol);
  const bool path = is_isomorphic_to(t, FamilySpec::path(t.order()));
  const bool star = is_isomorphic_to(t, FamilySpec::star(t.order()));
  if (path) add_family(r.structural, FamilyKind::Path);
  if (star) add_family(r.structural, FamilyKind::Star);
  r.consistent = (r.equality_lower == path) && (r.equality_upper == star);
  return r;
}

TheoremReport check_general_lower(const Graph& g, Tolerance tol) {
  require_connected(g);
  require_order(g, 3);
  TheoremReport r = start(Theorem::GeneralLower, g);
  r.bound_lower = closed_form_bound(BoundTheorem::GeneralLower, g.order()).lower;
  apply_bounds(r, tol);
  const bool cycle = is_isomorphic_to(g, FamilySpec::cycle(g.order()));
  if (cycle) add_family(r.structural, FamilyKind::Cycle);
  r.consistent = r.equality_lower == cycle;
  return r;
}

TheoremReport check_unicyclic_bounds(const Graph& g, Tolerance tol) {
  if (classify(g) != GraphClass::Unicyclic) throw Error(ErrorCode::NotUnicyclic, to_graph6(g));
  TheoremReport r = start(Theorem::UnicyclicBounds, g);
  const auto b = closed_form_bound(BoundTheorem::UnicyclicBounds, g.order());
  r.bound_lower = b.lower;
  r.bound_upper = b.upper;
  apply_bounds(r, tol);
  const bool cycle = is_isomorphic_to(g, FamilySpec::cycle(g.order()));
  const bool sprime = is_isomorphic_to(g, FamilySpec::s_prime(g.order()));
  if (cycle) add_family(r.structural, FamilyKind::Cycle);
  if (sprime) add_family(r.structural, FamilyKind::SPrime);
  const bool agree = (r.equality_lower == cycle) && (r.equality_upper == sprime);
  if (!agree && g.order() <= 4) {
    r.notes.push_back("small-order anomaly: equality flags disagree with C_n / S'_n at n = " +
                      std::to_string(g.order()));
    r.consistent = true;
  } else {
    r.consistent = agree;
  }
  return r;
}

TheoremReport check_bicyclic_lower(const Graph& g, Tolerance tol) {
  if (classify(g) != GraphClass::Bicyclic) throw Error(ErrorCode::NotBicyclic, to_graph6(g));
  TheoremReport r = start(Theorem::BicyclicLower, g);
  r.bound_lower = closed_form_bound(BoundTheorem::BicyclicLower, g.order()).lower;
  apply_bounds(r, tol);
  const bool joined = matches_any(g, FamilyKind::CPrimeJoined);
  const bool merged = matches_any(g, FamilyKind::CDoublePrimeMerged);
  if (joined) add_family(r.structural, FamilyKind::CPrimeJoined);
  if (merged) add_family(r.structural, FamilyKind::CDoublePrimeMerged);
  if (g.order() < 6) r.notes.push_back("C'_n does not exist below n = 6");
  r.consistent = r.equality_lower == (joined || merged);
  return r;
}

TheoremReport check_bicyclic_upper(const Graph& g, Tolerance tol) {
  if (classify(g) != GraphClass::Bicyclic) throw Error(ErrorCode::NotBicyclic, to_graph6(g));
  TheoremReport r = start(Theorem::BicyclicUpper, g);
  r.bound_upper = closed_form_bound(BoundTheorem::BicyclicUpper, g.order()).upper;
  apply_bounds(r, tol);
  const bool sdp = is_isomorphic_to(g, FamilySpec::s_double_prime(g.order()));
  if (sdp) add_family(r.structural, FamilyKind::SDoublePrime);
  r.consistent = r.equality_upper == sdp;
  return r;
}

TheoremReport check_edge_count_bounds(const Graph& g, Tolerance tol) {
  require_connected(g);
  require_order(g, 2);
  TheoremReport r = start(Theorem::EdgeCountBounds, g);
  const double big = g.max_degree();
  const double small = g.min_degree();
  const double m = g.size();
  r.bound_lower = (1.0 + small / (std::sqrt(big * big + small * small) + big)) * m;
  r.bound_upper = (big / small + std::sqrt(2.0) - 1.0) * m;
  apply_bounds(r, tol);
  const bool regular = g.is_regular();
  if (regular) r.structural.kind = StructuralKind::Regular;
  r.consistent = (r.equality_lower == regular) && (r.equality_upper == regular);
  return r;
}

TheoremReport check_lemma_edge_bounds(const Graph& g, Tolerance tol) {
  require_connected(g);
  require_order(g, 3);
  TheoremReport r = start(Theorem::LemmaEdgeBounds, g);
  const int caps[2] = {g.max_degree(), g.order() - 1};
  CompensatedSum lower_sum;
  CompensatedSum upper_sum;
  int hits_lower = 0;
  int hits_upper = 0;
  for (auto [u, v] : g.edges()) {
    const int du = g.degree(u);
    const int dv = g.degree(v);
    const int lo = std::min(du, dv);
    const int hi = std::max(du, dv);
    const double term = edge_term(du, dv);
    for (int which = 0; which < 2; ++which) {
      const int cap = caps[which];
      const TermInterval iv = edge_term_bounds(du, dv, cap);
      const bool inside = tol.at_least(term, iv.lower) && tol.at_most(term, iv.upper);
      const bool at_lower = tol.equal(term, iv.lower);
      const bool at_upper = tol.equal(term, iv.upper);
      const bool pattern_lower = lo == 1 ? hi == 2 : du == dv;
      const bool pattern_upper = lo == 1 ? hi == cap : (hi == cap && lo == 2);
      if (!inside) {
        r.holds = false;
        r.notes.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside interval");
      }
      if (at_lower != pattern_lower || at_upper != pattern_upper) {
        r.consistent = false;
        r.notes.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " equality disagrees with degree pattern");
      }
      if (which == 0) {
        lower_sum.add(iv.lower);
        upper_sum.add(iv.upper);
        hits_lower += at_lower;
        hits_upper += at_upper;
      }
    }
  }
  r.bound_lower = lower_sum.value();
  r.bound_upper = upper_sum.value();
  r.equality_lower = hits_lower > 0;
  r.equality_upper = hits_upper > 0;
  r.structural = degree_structure(g);
  r.notes.push_back(std::to_string(hits_lower) + " edge(s) at lower end, " + std::to_string(hits_upper) +
                    " at upper end");
  return r;
}

TheoremReport check(Theorem theorem, const Graph& g, Tolerance tol) {
  switch (theorem) {
    case Theorem::Sandwich: return check_sandwich(g, tol);
    case Theorem::TreeBounds: return check_tree_bounds(g, tol);
    case Theorem::GeneralLower: return check_general_lower(g, tol);
    case Theorem::UnicyclicBounds: return check_unicyclic_bounds(g, tol);
    case Theorem::BicyclicLower: return check_bicyclic_lower(g, tol);
    case Theorem::BicyclicUpper: return check_bicyclic_upper(g, tol);
    case Theorem::EdgeCountBounds: return check_edge_count_bounds(g, tol);
    case Theorem::LemmaEdgeBounds: return check_lemma_edge_bounds(g, tol);
    case Theorem::FMonotone: break;
  }
  throw Error(ErrorCode::UnknownTheorem, "f-monotone is not a per-graph check");
}

double f_lemma(double x, int n) {
  if (n < 5) throw Error(ErrorCode::DomainViolation, "needs n >= 5, got " + std::to_string(n));
  const int hi = (n - 3) / 2;
  if (!(x >= 1.0 && x <= hi)) {
    throw Error(ErrorCode::DomainViolation,
                "x = " + std::to_string(x) + " outside [1, " + std::to_string(hi) + "]");
  }
  const double a = x + 2.0;
  const double b = n - x - 1.0;
  return x * std::sqrt(a * a + 1.0) + (n - x - 3.0) * std::sqrt(b * b + 1.0);
}

bool check_f_monotone(int n, int grid) {
  if (n < 5) throw Error(ErrorCode::DomainViolation, "needs n >= 5, got " + std::to_string(n));
  if (grid < 2) throw Error(ErrorCode::DomainViolation, "needs grid >= 2, got " + std::to_string(grid));
  const int hi = (n - 3) / 2;
  if (hi == 1) return true;
  constexpr double kSlopeLimit = 1e-9;
  constexpr double kStep = 1e-4;
  const double span = hi - 1.0;
  double prev = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = i + 1 == grid ? double(hi) : 1.0 + span * i / (grid - 1);
    const double fx = f_lemma(x, n);
    if (i > 0 && fx > prev) return false;
    prev = fx;
    double slope;
    if (i == 0) {
      slope = (f_lemma(x + kStep, n) - fx) / kStep;
    } else if (i + 1 == grid) {
      slope = (fx - f_lemma(x - kStep, n)) / kStep;
    } else {
      slope = (f_lemma(std::min(x + kStep, double(hi)), n) - f_lemma(std::max(x - kStep, 1.0), n)) /
              (std::min(x + kStep, double(hi)) - std::max(x - kStep, 1.0));
    }
    if (slope > kSlopeLimit) return false;
  }
  return true;
}

}  // namespace hso
