#pragma once

#include <string>
#include <vector>

#include "hso/campaign.hpp"
#include "hso/graph.hpp"

namespace hso {

/// A connected graph whose HSO drops when one edge is added.
struct MonotonicityWitness {
  int n = 0;
  std::string graph6_before;
  std::string graph6_after;
  Edge added_edge{};
  double hso_before = 0.0;
  double hso_after = 0.0;
  double delta = 0.0;  // hso_after - hso_before, below -tolerance
};

inline constexpr int kMonotonicityMaxOrder = 8;

/// Every (G, uv) with G connected of order 3..n_max (graphs in canonical
/// labeling), uv a non-edge, and HSO(G + uv) < HSO(G) - tolerance. Sorted by
/// order, canonical code of G, then edge. Throws OrderTooLarge for
/// n_max > 8, OrderOutOfRange for n_max < 3.
std::vector<MonotonicityWitness> find_monotonicity_counterexamples(int n_max, const CampaignOptions& opt = {});

/// Witnesses whose drop HSO(G) - HSO(G + uv) equals `drop` within tolerance.
std::vector<MonotonicityWitness> witnesses_with_drop(const std::vector<MonotonicityWitness>& all, double drop,
                                                     Tolerance tol = {});

/// Sweeps all connected graphs of order n against HSO(S_n). A graph above
/// HSO(S_n) + tolerance is a violation (a counterexample). The single
/// extremum entry carries the maximiser(s) and whether they match the star.
/// n in [2, 8]; 9 needs opt.allow_large.
CampaignSummary check_conjecture_star_max(int n, const CampaignOptions& opt = {});

/// Per-order min / max HSO over a class, cross-checked against the
/// characterised extremal families (tree: P_n / S_n; unicyclic: C_n / S'_n;
/// bicyclic: C'_n, C''_n / S''_n; connected: C_n / S_n).
CampaignSummary extremal_table(EnumClass cls, int n_lo, int n_hi, const CampaignOptions& opt = {});

}  // namespace hso
