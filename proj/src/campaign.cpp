#include "hso/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "hso/error.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"
#include "hso/parallel.hpp"
#include "hso/families.hpp"

namespace hso {

namespace {

int minimum_order(Theorem t) {
  switch (t) {
    case Theorem::Sandwich:
    case Theorem::EdgeCountBounds: return 2;
    case Theorem::TreeBounds:
    case Theorem::GeneralLower:
    case Theorem::LemmaEdgeBounds:
    case Theorem::UnicyclicBounds: return 3;
    case Theorem::BicyclicLower:
    case Theorem::BicyclicUpper: return 4;
    case Theorem::FMonotone: return 5;
  }
  return 1;
}

std::string describe_failure(const TheoremReport& r) {
  std::string why;
  if (!r.holds) why = "bound violated";
  if (!r.consistent) why += std::string(why.empty() ? "" : "; ") + "equality flags disagree with structure";
  return why;
}

std::vector<FamilyKind> expected_min(EnumClass cls, int n) {
  switch (cls) {
    case EnumClass::Tree: return {FamilyKind::Path};
    case EnumClass::Unicyclic: return {FamilyKind::Cycle};
    case EnumClass::Bicyclic: return {FamilyKind::CPrimeJoined, FamilyKind::CDoublePrimeMerged};
    case EnumClass::AllConnected:
      if (n <= 2) return {FamilyKind::Path};
      return {FamilyKind::Cycle};
  }
  return {};
}

std::vector<FamilyKind> expected_max(EnumClass cls) {
  switch (cls) {
    case EnumClass::Tree: return {FamilyKind::Star};
    case EnumClass::Unicyclic: return {FamilyKind::SPrime};
    case EnumClass::Bicyclic: return {FamilyKind::SDoublePrime};
    case EnumClass::AllConnected: return {FamilyKind::Star};
  }
  return {};
}

std::vector<std::string> matching_families(const Graph& g, const std::vector<FamilyKind>& kinds) {
  std::vector<std::string> out;
  for (FamilyKind k : kinds) {
    for (const auto& spec : family_members(k, g.order())) {
      if (is_isomorphic_to(g, spec)) {
        out.push_back(spec.to_string());
        break;
      }
    }
  }
  return out;
}

}  // namespace

OrderExtremum order_extremum(EnumClass cls, int n, const std::vector<Graph>& graphs,
                             const std::vector<double>& values, Tolerance tol) {
  OrderExtremum e;
  e.n = n;
  e.count = graphs.size();
  if (graphs.empty()) return e;
  e.min_value = *std::min_element(values.begin(), values.end());
  e.max_value = *std::max_element(values.begin(), values.end());
  const auto want_min = expected_min(cls, n);
  const auto want_max = expected_max(cls);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (tol.equal(values[i], e.min_value)) {
      e.min_graphs.push_back(to_graph6(graphs[i]));
      auto fams = matching_families(graphs[i], want_min);
      if (fams.empty()) e.min_expected = false;
      e.min_families.insert(e.min_families.end(), fams.begin(), fams.end());
    }
    if (tol.equal(values[i], e.max_value)) {
      e.max_graphs.push_back(to_graph6(graphs[i]));
      auto fams = matching_families(graphs[i], want_max);
      if (fams.empty()) e.max_expected = false;
      e.max_families.insert(e.max_families.end(), fams.begin(), fams.end());
    }
  }
  return e;
}

EnumClass default_class(Theorem theorem) {
  switch (theorem) {
    case Theorem::TreeBounds: return EnumClass::Tree;
    case Theorem::UnicyclicBounds: return EnumClass::Unicyclic;
    case Theorem::BicyclicLower:
    case Theorem::BicyclicUpper: return EnumClass::Bicyclic;
    default: return EnumClass::AllConnected;
  }
}

std::vector<Graph> campaign_graphs(EnumClass cls, int n, const CampaignOptions& opt) {
  return enumerate(EnumSpec{cls, n, std::nullopt}, EnumOptions{opt.jobs, opt.allow_large});
}

CampaignResult verify_campaign(Theorem theorem, EnumClass cls, int n_lo, int n_hi, const CampaignOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n_lo > n_hi) throw Error(ErrorCode::Usage, "empty order range");
  if (n_lo < minimum_order(theorem)) {
    throw Error(ErrorCode::OrderOutOfRange, std::string(to_string(theorem)) + " needs n >= " +
                                                std::to_string(minimum_order(theorem)));
  }
  CampaignResult out;
  auto& s = out.summary;
  s.campaign = "verify:" + std::string(to_string(theorem));
  s.graph_class = theorem == Theorem::FMonotone ? "none" : std::string(to_string(cls));
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  s.tolerance = opt.tolerance.rel;

  if (theorem == Theorem::FMonotone) {
    for (int n = n_lo; n <= n_hi; ++n) {
      ++s.graphs_examined;
      if (!check_f_monotone(n, opt.f_grid)) {
        s.violations.push_back({n, "", 0.0, "f increases somewhere on its domain"});
      }
    }
    s.notes.push_back("grid = " + std::to_string(opt.f_grid) + " points per order");
  } else {
    for (int n = n_lo; n <= n_hi; ++n) {
      const auto graphs = campaign_graphs(cls, n, opt);
      auto reports =
          parallel_map(graphs, opt.jobs, [&](const Graph& g) { return check(theorem, g, opt.tolerance); });
      std::vector<double> values;
      values.reserve(reports.size());
      for (const auto& r : reports) {
        values.push_back(r.value);
        if (!r.ok()) s.violations.push_back({r.n, r.graph6, r.value, describe_failure(r)});
        for (const auto& note : r.notes) {
          if (note.find("anomaly") != std::string::npos) s.notes.push_back(r.graph6 + ": " + note);
        }
      }
      s.graphs_examined += reports.size();
      s.extrema.push_back(order_extremum(cls, n, graphs, values, opt.tolerance));
      out.reports.insert(out.reports.end(), std::make_move_iterator(reports.begin()),
                         std::make_move_iterator(reports.end()));
    }
  }
  s.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CampaignResult verify_graphs(Theorem theorem, const std::vector<Graph>& graphs, const CampaignOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignResult out;
  auto& s = out.summary;
  s.campaign = "verify:" + std::string(to_string(theorem));
  s.graph_class = "input";
  s.tolerance = opt.tolerance.rel;
  if (!graphs.empty()) {
    s.n_lo = graphs.front().order();
    s.n_hi = graphs.front().order();
    for (const auto& g : graphs) {
      s.n_lo = std::min(s.n_lo, g.order());
      s.n_hi = std::max(s.n_hi, g.order());
    }
  }
  out.reports = parallel_map(graphs, opt.jobs, [&](const Graph& g) { return check(theorem, g, opt.tolerance); });
  s.graphs_examined = out.reports.size();
  for (const auto& r : out.reports) {
    if (!r.ok()) s.violations.push_back({r.n, r.graph6, r.value, describe_failure(r)});
  }
  s.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace hso
