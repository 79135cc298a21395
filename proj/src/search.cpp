#include "hso/search.hpp"

#include <chrono>
#include <string>

#include "hso/error.hpp"
#include "hso/families.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"
#include "hso/parallel.hpp"

namespace hso {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<MonotonicityWitness> scan_graph(const Graph& g, Tolerance tol) {
  std::vector<MonotonicityWitness> out;
  const double before = hso_value(g);
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const Graph after = g.with_edge(u, v);
      const double value = hso_value(after);
      const double delta = value - before;
      if (delta < -tol.slack(before)) {
        out.push_back({n, to_graph6(g), to_graph6(after), {u, v}, before, value, delta});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<MonotonicityWitness> find_monotonicity_counterexamples(int n_max, const CampaignOptions& opt) {
  if (n_max > kMonotonicityMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge, "monotonicity search capped at n = 8, got " + std::to_string(n_max));
  }
  if (n_max < 3) throw Error(ErrorCode::OrderOutOfRange, "monotonicity search needs n_max >= 3");
  std::vector<MonotonicityWitness> out;
  for (int n = 3; n <= n_max; ++n) {
    const auto graphs = connected_graphs(n, EnumOptions{opt.jobs, false});
    const auto found = parallel_map(graphs, opt.jobs, [&](const Graph& g) { return scan_graph(g, opt.tolerance); });
    for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::vector<MonotonicityWitness> witnesses_with_drop(const std::vector<MonotonicityWitness>& all, double drop,
                                                     Tolerance tol) {
  std::vector<MonotonicityWitness> out;
  for (const auto& w : all) {
    if (tol.equal(-w.delta, drop)) out.push_back(w);
  }
  return out;
}

CampaignSummary check_conjecture_star_max(int n, const CampaignOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 2) throw Error(ErrorCode::OrderOutOfRange, "conjecture sweep needs n >= 2");
  const auto graphs = connected_graphs(n, EnumOptions{opt.jobs, opt.allow_large});
  const auto values = parallel_map(graphs, opt.jobs, [](const Graph& g) { return hso_value(g); });
  const double star = closed_form_hso(FamilySpec::star(n));

  CampaignSummary s;
  s.campaign = "conjecture:star-max";
  s.graph_class = "connected";
  s.n_lo = n;
  s.n_hi = n;
  s.tolerance = opt.tolerance.rel;
  s.graphs_examined = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (values[i] > star + opt.tolerance.slack(star)) {
      s.violations.push_back({n, to_graph6(graphs[i]), values[i], "HSO exceeds HSO(S_n): counterexample"});
    }
  }
  s.extrema.push_back(order_extremum(EnumClass::AllConnected, n, graphs, values, opt.tolerance));
  s.wall_time_s = seconds_since(t0);
  return s;
}

CampaignSummary extremal_table(EnumClass cls, int n_lo, int n_hi, const CampaignOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n_lo > n_hi) throw Error(ErrorCode::Usage, "empty order range");
  CampaignSummary s;
  s.campaign = "extremal-table";
  s.graph_class = std::string(to_string(cls));
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  s.tolerance = opt.tolerance.rel;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto graphs = campaign_graphs(cls, n, opt);
    if (graphs.empty()) {
      s.notes.push_back("no " + s.graph_class + " graphs at n = " + std::to_string(n));
      continue;
    }
    const auto values = parallel_map(graphs, opt.jobs, [](const Graph& g) { return hso_value(g); });
    s.graphs_examined += graphs.size();
    auto e = order_extremum(cls, n, graphs, values, opt.tolerance);
    if (!e.min_expected) s.notes.push_back("n = " + std::to_string(n) + ": minimiser outside the expected families");
    if (!e.max_expected) s.notes.push_back("n = " + std::to_string(n) + ": maximiser outside the expected families");
    s.extrema.push_back(std::move(e));
  }
  s.wall_time_s = seconds_since(t0);
  return s;
}

}  // namespace hso
