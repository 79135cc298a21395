#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "hso/campaign.hpp"
#include "hso/enumerate.hpp"
#include "hso/error.hpp"
#include "hso/families.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"
#include "hso/report.hpp"
#include "hso/search.hpp"
#include "hso/verify.hpp"

namespace hso::cli {

namespace {

struct Globals {
  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  double tolerance = kDefaultTolerance;
  bool allow_large = false;
};

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::Usage, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

CampaignOptions campaign_options(const Globals& g) {
  CampaignOptions opt;
  opt.jobs = g.jobs;
  opt.tolerance = Tolerance{g.tolerance};
  opt.allow_large = g.allow_large;
  return opt;
}

// Writes to --out when given, otherwise to `out`.
template <class Fn>
void emit(const Globals& g, std::ostream& out, Fn&& fn) {
  if (g.out_path.empty()) {
    fn(out);
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + g.out_path + " for writing");
  fn(f);
  f.flush();
  if (!f) throw Error(ErrorCode::Io, "write failed: " + g.out_path);
}

Graph parse_input_graph(const std::string& text) {
  if (text.find(':') != std::string::npos) return build(parse_family_spec(text));
  return parse_graph6(text);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_compute(const Globals& g, const std::string& input, bool per_edge, std::ostream& out) {
  const Graph graph = parse_input_graph(input);
  const IndexValue v = hso(graph);
  const OutputHeader h{"none", g.tolerance};
  emit(g, out, [&](std::ostream& os) {
    switch (parse_output_format(g.format)) {
      case OutputFormat::Json: {
        auto doc = nlohmann::json{{"header", to_json(h)},
                                  {"input", input},
                                  {"graph6", to_graph6(graph)},
                                  {"n", graph.order()},
                                  {"m", graph.size()},
                                  {"max_degree", graph.max_degree()},
                                  {"min_degree", graph.min_degree()},
                                  {"class", to_string(classify(graph))},
                                  {"hso", v.hso},
                                  {"so", v.so}};
        if (per_edge) doc["edges"] = to_json(v)["edges"];
        os << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        os << header_line(h) << '\n' << "input,graph6,n,m,max_degree,min_degree,class,hso,so\n";
        os << input << ',' << to_graph6(graph) << ',' << graph.order() << ',' << graph.size() << ','
           << graph.max_degree() << ',' << graph.min_degree() << ',' << to_string(classify(graph)) << ','
           << format_number(v.hso) << ',' << format_number(v.so) << '\n';
        if (per_edge) {
          os << "u,v,du,dv,term\n";
          for (const auto& t : v.per_edge) {
            os << t.u << ',' << t.v << ',' << t.du << ',' << t.dv << ',' << format_number(t.value) << '\n';
          }
        }
        break;
      case OutputFormat::Text:
        write_index_text(os, graph, v, per_edge);
        break;
    }
  });
  return kExitClean;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_graph6_stream(f);
}

int cmd_verify(const Globals& g, const std::string& theorem_name, const std::vector<std::string>& inputs,
               const std::string& file, const std::string& range, const std::string& cls_name, int grid,
               std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const Theorem theorem = parse_theorem(theorem_name);
  auto opt = campaign_options(g);
  opt.f_grid = grid;
  const auto format = parse_output_format(g.format);

  CampaignResult result;
  if (!inputs.empty() || !file.empty()) {
    if (theorem == Theorem::FMonotone) throw Error(ErrorCode::Usage, "f-monotone takes --n, not graphs");
    std::vector<Graph> graphs;
    for (const auto& s : inputs) graphs.push_back(parse_input_graph(s));
    if (!file.empty()) {
      auto more = read_graph_file(file);
      graphs.insert(graphs.end(), more.begin(), more.end());
    }
    result = verify_graphs(theorem, graphs, opt);
  } else {
    if (range.empty()) throw Error(ErrorCode::Usage, "verify needs --n A..B, graph6 arguments, or --file");
    const auto [lo, hi] = parse_order_range(range);
    const EnumClass cls = cls_name.empty() ? default_class(theorem) : parse_enum_class(cls_name);
    result = verify_campaign(theorem, cls, lo, hi, opt);
  }

  emit(g, out, [&](std::ostream& os) { write_campaign(os, format, {std::string(to_string(theorem)), g.tolerance}, result); });
  if (!g.out_path.empty() && format != OutputFormat::Text) {
    write_campaign(out, OutputFormat::Text, {std::string(to_string(theorem)), g.tolerance}, result);
  }
  err << "wall time " << seconds_since(t0) << " s\n";
  return result.summary.clean() ? kExitClean : kExitViolation;
}

int cmd_monotonicity(const Globals& g, int n_max, const std::string& pairs_path, std::ostream& out,
                     std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ws = find_monotonicity_counterexamples(n_max, campaign_options(g));
  const OutputHeader h{"edge-addition-monotonicity", g.tolerance};
  // drop quoted for the figure graph that is not reproduced here
  const double reference = 2 * std::sqrt(17.0) - 2 * std::sqrt(5.0) - std::sqrt(2.0);
  emit(g, out, [&](std::ostream& os) { write_witnesses(os, parse_output_format(g.format), h, ws, reference); });
  if (!pairs_path.empty()) {
    std::ofstream f(pairs_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + pairs_path + " for writing");
    write_witness_pairs(f, h, ws);
    if (!f) throw Error(ErrorCode::Io, "write failed: " + pairs_path);
  }
  err << "wall time " << seconds_since(t0) << " s\n";
  return kExitClean;
}

int cmd_conjecture(const Globals& g, const std::string& range, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [lo, hi] = parse_order_range(range);
  CampaignSummary all;
  for (int n = lo; n <= hi; ++n) {
    auto s = check_conjecture_star_max(n, campaign_options(g));
    if (n == lo) {
      all = std::move(s);
      continue;
    }
    all.n_hi = n;
    all.graphs_examined += s.graphs_examined;
    all.violations.insert(all.violations.end(), s.violations.begin(), s.violations.end());
    all.extrema.insert(all.extrema.end(), s.extrema.begin(), s.extrema.end());
    all.notes.insert(all.notes.end(), s.notes.begin(), s.notes.end());
  }
  emit(g, out, [&](std::ostream& os) {
    write_summary(os, parse_output_format(g.format), {"conjecture-star-max", g.tolerance}, all);
  });
  err << "wall time " << seconds_since(t0) << " s\n";
  if (!all.clean()) {
    err << "COUNTEREXAMPLE: " << all.violations.size() << " graph(s) exceed HSO(S_n)\n";
    for (const auto& v : all.violations) err << "  " << v.graph6 << ' ' << format_number(v.value) << '\n';
    return kExitCounterexample;
  }
  return kExitClean;
}

int cmd_extremal(const Globals& g, const std::string& cls_name, const std::string& range, std::ostream& out,
                 std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [lo, hi] = parse_order_range(range);
  const EnumClass cls = parse_enum_class(cls_name);
  const auto s = extremal_table(cls, lo, hi, campaign_options(g));
  emit(g, out, [&](std::ostream& os) {
    write_summary(os, parse_output_format(g.format), {"extremal-" + std::string(to_string(cls)), g.tolerance}, s);
  });
  err << "wall time " << seconds_since(t0) << " s\n";
  return kExitClean;
}

int cmd_enumerate(const Globals& g, const std::string& cls_name, int n, std::optional<int> edges,
                  std::ostream& out, std::ostream& err) {
  const EnumClass cls = parse_enum_class(cls_name);
  if (edges && cls != EnumClass::AllConnected) throw Error(ErrorCode::Usage, "--edges only applies to --class connected");
  const auto graphs = enumerate(EnumSpec{cls, n, edges}, EnumOptions{g.jobs, g.allow_large});
  if (g.out_path.empty()) {
    for (const auto& graph : graphs) out << to_graph6(graph) << '\n';
    err << graphs.size() << " graphs\n";
    return kExitClean;
  }
  emit(g, out, [&](std::ostream& os) {
    os << header_line({"none", g.tolerance}) << '\n';
    os << "# class " << to_string(cls) << " n " << n << '\n';
    for (const auto& graph : graphs) os << to_graph6(graph) << '\n';
  });
  out << graphs.size() << '\n';
  return kExitClean;
}

}  // namespace

std::pair<int, int> parse_order_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw Error(ErrorCode::Usage, "empty range " + std::string(text));
  return {lo, hi};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic Sombor index toolkit", "hso"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to this file");
  auto* jobs_opt = app.add_option("--jobs", g.jobs, "Worker threads (default $HSO_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", g.tolerance, "Relative equality tolerance, in (0, 1e-3]")
      ->check([](const std::string& s) -> std::string {
        double x = 0;
        try {
          x = std::stod(s);
        } catch (...) {
          return "not a number";
        }
        return x > 0 && x <= 1e-3 ? "" : "tolerance must lie in (0, 1e-3]";
      });
  app.add_flag("--allow-large", g.allow_large, "Permit n = 9 connected sweeps");

  auto* compute = app.add_subcommand("compute", "HSO and SO of a graph6 string or family spec");
  std::string compute_input;
  bool per_edge = false;
  compute->add_option("input", compute_input, "graph6 or kind:params")->required();
  compute->add_flag("--edges", per_edge, "Print per-edge terms");

  auto* verify = app.add_subcommand("verify", "Check a bound over a class or over given graphs");
  std::string theorem;
  std::vector<std::string> verify_inputs;
  std::string verify_file, verify_range, verify_class;
  int grid = 1000;
  verify->add_option("theorem", theorem, "Bound identifier")->required();
  verify->add_option("graphs", verify_inputs, "graph6 strings or family specs");
  verify->add_option("--file", verify_file, "File with one graph6 per line");
  verify->add_option("--n", verify_range, "Order range A..B");
  verify->add_option("--class", verify_class, "tree, unicyclic, bicyclic or connected");
  verify->add_option("--grid", grid, "Grid size for f-monotone")->check(CLI::Range(2, 10000000));

  auto* search = app.add_subcommand("search", "Counterexample and extremal searches");
  search->require_subcommand(1);
  auto* mono = search->add_subcommand("monotonicity", "Edge additions that lower HSO");
  int n_max = 5;
  std::string pairs_path;
  mono->add_option("--n-max", n_max, "Largest order searched")->required();
  mono->add_option("--pairs", pairs_path, "Also write graph6 before/after pairs here");
  auto* conj = search->add_subcommand("conjecture", "Is the star the HSO maximiser?");
  std::string conj_range;
  conj->add_option("--n", conj_range, "Order or range A..B")->required();
  auto* table = search->add_subcommand("extremal-table", "Per-order min and max HSO");
  std::string table_class, table_range;
  table->add_option("--class", table_class, "tree, unicyclic, bicyclic or connected")->required();
  table->add_option("--n", table_range, "Order range A..B")->required();

  auto* enumer = app.add_subcommand("enumerate", "List graphs of a class as graph6, sorted by canonical code");
  std::string enum_class;
  int enum_n = 0;
  std::optional<int> enum_edges;
  enumer->add_option("--class", enum_class, "tree, unicyclic, bicyclic or connected")->required();
  enumer->add_option("--n", enum_n, "Order")->required();
  enumer->add_option("--edges", enum_edges, "Edge count (connected only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitClean;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitClean;
  } catch (const CLI::CallForVersion& e) {
    out << tool_version() << '\n';
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (jobs_opt->count() == 0) {
    if (const char* env = std::getenv("HSO_JOBS"); env != nullptr && *env != '\0') {
      const std::string_view text(env);
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), g.jobs);
      if (ec != std::errc{} || end != text.data() + text.size() || g.jobs < 1) {
        err << "HSO_JOBS must be a positive integer\n";
        return kExitUsage;
      }
    }
  }

  try {
    if (*compute) return cmd_compute(g, compute_input, per_edge, out);
    if (*verify) {
      return cmd_verify(g, theorem, verify_inputs, verify_file, verify_range, verify_class, grid, out, err);
    }
    if (*mono) return cmd_monotonicity(g, n_max, pairs_path, out, err);
    if (*conj) return cmd_conjecture(g, conj_range, out, err);
    if (*table) return cmd_extremal(g, table_class, table_range, out, err);
    if (*enumer) return cmd_enumerate(g, enum_class, enum_n, enum_edges, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hso::cli
