#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hso/enumerate.hpp"
#include "hso/verify.hpp"

namespace hso {

struct CampaignOptions {
  int jobs = 1;
  Tolerance tolerance{};
  bool allow_large = false;
  int f_grid = 1000;  // grid size for the f-monotone campaign
};

struct Violation {
  int n = 0;
  std::string graph6;
  double value = 0.0;
  std::string reason;
};

/// Minimum and maximum HSO at one order, with every graph attaining each
/// (ties within tolerance) and the expected extremal families each matches.
struct OrderExtremum {
  int n = 0;
  std::size_t count = 0;
  double min_value = 0.0;
  std::vector<std::string> min_graphs;
  std::vector<std::string> min_families;
  double max_value = 0.0;
  std::vector<std::string> max_graphs;
  std::vector<std::string> max_families;
  bool min_expected = true;  // every minimiser matches an expected family
  bool max_expected = true;
};

struct CampaignSummary {
  std::string campaign;
  std::string graph_class;
  int n_lo = 0;
  int n_hi = 0;
  std::size_t graphs_examined = 0;
  std::vector<Violation> violations;
  std::vector<OrderExtremum> extrema;
  std::vector<std::string> notes;
  double tolerance = kDefaultTolerance;
  double wall_time_s = 0.0;  // not serialised to files

  bool clean() const { return violations.empty(); }
};

struct CampaignResult {
  CampaignSummary summary;
  std::vector<TheoremReport> reports;
};

/// Min / max summary for one order; the expected families follow the class.
OrderExtremum order_extremum(EnumClass cls, int n, const std::vector<Graph>& graphs,
                             const std::vector<double>& values, Tolerance tol);

/// Natural graph class of a theorem's campaign (tree-bounds -> tree, ...).
EnumClass default_class(Theorem theorem);

/// Graphs of class `cls` at order n, honouring the enumeration caps.
std::vector<Graph> campaign_graphs(EnumClass cls, int n, const CampaignOptions& opt);

/// Runs `theorem` over every graph of `cls` with n_lo <= n <= n_hi. Reports
/// come back in enumeration order regardless of opt.jobs; a report that
/// fails to hold or is inconsistent becomes a violation. For FMonotone the
/// range is over n and no graphs are enumerated.
CampaignResult verify_campaign(Theorem theorem, EnumClass cls, int n_lo, int n_hi,
                               const CampaignOptions& opt = {});

/// Runs `theorem` over explicit graphs (CLI --file / positional input).
CampaignResult verify_graphs(Theorem theorem, const std::vector<Graph>& graphs,
                             const CampaignOptions& opt = {});

}  // namespace hso
