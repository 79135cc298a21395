#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hso/families.hpp"
#include "hso/graph.hpp"

namespace hso {

inline constexpr double kDefaultTolerance = 1e-9;

/// Relative comparison used for every bound and equality decision:
/// |a - b| <= rel * max(1, |b|).
struct Tolerance {
  double rel = kDefaultTolerance;

  double slack(double bound) const;
  bool equal(double value, double bound) const;
  bool at_least(double value, double bound) const { return value >= bound - slack(bound); }
  bool at_most(double value, double bound) const { return value <= bound + slack(bound); }
};

enum class Theorem {
  Sandwich,
  TreeBounds,
  GeneralLower,
  UnicyclicBounds,
  BicyclicLower,
  BicyclicUpper,
  EdgeCountBounds,
  LemmaEdgeBounds,
  FMonotone,
};

std::string_view to_string(Theorem t);
/// Throws UnknownTheorem.
Theorem parse_theorem(std::string_view name);

enum class StructuralKind { None, Regular, GammaMember, ExtremalFamilyMatch };

struct StructuralClass {
  StructuralKind kind = StructuralKind::None;
  std::vector<FamilyKind> families;  // set for ExtremalFamilyMatch

  /// "None", "Regular", "GammaMember" or "ExtremalFamilyMatch(path|star)".
  std::string to_string() const;
};

struct TheoremReport {
  Theorem theorem = Theorem::Sandwich;
  std::string graph6;
  int n = 0;
  int m = 0;
  std::optional<double> bound_lower;
  std::optional<double> bound_upper;
  double value = 0.0;
  bool holds = true;
  bool equality_lower = false;
  bool equality_upper = false;
  StructuralClass structural;
  bool consistent = true;
  std::vector<std::string> notes;

  bool ok() const { return holds && consistent; }
};

/// Vertices of degree above the minimum are non-empty and independent,
/// i.e. the graph is not regular and every edge has a minimum-degree
/// endpoint. Throws DisconnectedInput.
bool is_gamma_member(const Graph& g);

/// Graph isomorphic to the realisation of `spec`.
bool is_isomorphic_to(const Graph& g, const FamilySpec& spec);

/// SO/Delta <= HSO <= SO/delta; left equality iff regular, right equality
/// iff regular or Gamma member. Needs a connected graph with n >= 2.
TheoremReport check_sandwich(const Graph& g, Tolerance tol = {});

/// 2 sqrt5 + (n-3) sqrt2 <= HSO(T) <= (n-1) sqrt(n^2-2n+2); equality at
/// P_n and S_n respectively. Throws NotATree, OrderTooSmall (n <= 2).
TheoremReport check_tree_bounds(const Graph& t, Tolerance tol = {});

/// HSO >= sqrt2 n with equality iff C_n. Throws DisconnectedInput,
/// OrderTooSmall (n <= 2).
TheoremReport check_general_lower(const Graph& g, Tolerance tol = {});

/// sqrt2 n <= HSO <= (n-3) sqrt(n^2-2n+2) + sqrt(n^2-2n+5) + sqrt2 with
/// equality at C_n and S'_n. Disagreements at n in {3, 4} are recorded in
/// notes without failing consistency. Throws NotUnicyclic.
TheoremReport check_unicyclic_bounds(const Graph& g, Tolerance tol = {});

/// HSO >= (n-3) sqrt2 + 2 sqrt13 with equality iff C'_n or C''_n (any
/// split). Throws NotBicyclic.
TheoremReport check_bicyclic_lower(const Graph& g, Tolerance tol = {});

/// HSO <= (n-4) sqrt(n^2-2n+2) + sqrt(n^2-2n+5) + sqrt(n^2-2n+10)/3 + sqrt13
/// with equality iff S''_n. Throws NotBicyclic.
TheoremReport check_bicyclic_upper(const Graph& g, Tolerance tol = {});

/// (1 + delta/(sqrt(Delta^2+delta^2)+Delta)) m <= HSO <= (Delta/delta + sqrt2 - 1) m,
/// both equalities iff regular. Throws DisconnectedInput, OrderTooSmall.
TheoremReport check_edge_count_bounds(const Graph& g, Tolerance tol = {});

/// Every edge term inside its pendant / non-pendant interval, both with
/// Delta and with n - 1 as the degree cap, and each attained end matches
/// its stated degree pattern. bound_lower / bound_upper report the sums of
/// the Delta-parameterised interval ends. Throws DisconnectedInput,
/// OrderTooSmall (n <= 2).
TheoremReport check_lemma_edge_bounds(const Graph& g, Tolerance tol = {});

/// Dispatches to the checker for `theorem` (not FMonotone).
TheoremReport check(Theorem theorem, const Graph& g, Tolerance tol = {});

/// f(x) = x sqrt((x+2)^2+1) + (n-x-3) sqrt((n-x-1)^2+1) on
/// 1 <= x <= floor((n-3)/2), n >= 5. Throws DomainViolation.
double f_lemma(double x, int n);

/// f is non-increasing on a uniform grid of `grid` points over its domain,
/// and finite-difference slopes (central inside, one-sided at the ends) are
/// <= 1e-9 everywhere. A single-point domain is vacuously monotone.
/// Throws DomainViolation for n < 5 or grid < 2.
bool check_f_monotone(int n, int grid);

}  // namespace hso
