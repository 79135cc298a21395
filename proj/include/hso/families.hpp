#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hso/graph.hpp"

namespace hso {

enum class FamilyKind {
  Path,
  Star,
  Cycle,
  Complete,
  TrianglePendants,   // S(a1, a2, a3)
  SPrime,             // S(n-3, 0, 0)
  CPrimeJoined,       // C_p and C_q joined by a bridge
  CDoublePrimeMerged, // C_p and C_q sharing one edge
  C33,                // two triangles sharing a vertex, pendants on it
  SDoublePrime,       // K4 - e, pendants on a degree-3 vertex
};

std::string_view to_string(FamilyKind kind);

/// A named family member. `params` holds (a1, a2, a3) for TrianglePendants,
/// (p, q) for the two-cycle kinds, and is empty otherwise.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int n = 0;
  std::vector<int> params;

  static FamilySpec path(int n) { return {FamilyKind::Path, n, {}}; }
  static FamilySpec star(int n) { return {FamilyKind::Star, n, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, n, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, n, {}}; }
  static FamilySpec triangle_pendants(int a1, int a2, int a3) {
    return {FamilyKind::TrianglePendants, a1 + a2 + a3 + 3, {a1, a2, a3}};
  }
  static FamilySpec s_prime(int n) { return {FamilyKind::SPrime, n, {}}; }
  static FamilySpec c_prime(int p, int q) { return {FamilyKind::CPrimeJoined, p + q, {p, q}}; }
  static FamilySpec c_double_prime(int p, int q) {
    return {FamilyKind::CDoublePrimeMerged, p + q - 2, {p, q}};
  }
  static FamilySpec c33(int n) { return {FamilyKind::C33, n, {}}; }
  static FamilySpec s_double_prime(int n) { return {FamilyKind::SDoublePrime, n, {}}; }

  /// Round-trips through parse_family_spec, e.g. "tripend:2,1,0".
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws InvalidParameters when the spec's parameter constraints fail.
void validate(const FamilySpec& spec);

/// Grammar: path:N star:N cycle:N complete:N tripend:A1,A2,A3 sprime:N
/// cprime:P,Q cdprime:P,Q c33:N sdprime:N. Throws InvalidParameters.
FamilySpec parse_family_spec(std::string_view text);

/// Labeled realisation; hub and cycle vertices come first, pendants last.
Graph build(const FamilySpec& spec);

/// Closed-form HSO of the family member.
double closed_form_hso(const FamilySpec& spec);

/// All valid specs of a kind at order n (every split for the two-cycle
/// kinds, every a1 >= a2 >= a3 for TrianglePendants). Empty if none exist.
std::vector<FamilySpec> family_members(FamilyKind kind, int n);

enum class BoundTheorem {
  TreeBounds,
  GeneralLower,
  UnicyclicLower,
  UnicyclicUpper,
  UnicyclicBounds,
  BicyclicLower,
  BicyclicUpper,
};

std::string_view to_string(BoundTheorem t);
/// Throws UnknownTheorem.
BoundTheorem parse_bound_theorem(std::string_view name);

struct BoundPair {
  std::optional<double> lower;
  std::optional<double> upper;
};

/// Numeric bound(s) of a theorem at order n. Throws OrderOutOfRange below
/// the theorem's validity (trees n >= 2, general and unicyclic n >= 3,
/// bicyclic n >= 4).
BoundPair closed_form_bound(BoundTheorem theorem, int n);

}  // namespace hso
