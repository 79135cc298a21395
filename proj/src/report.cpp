#include "hso/report.hpp"

#include <charconv>
#include <ostream>

#include "hso/error.hpp"

namespace hso {

using nlohmann::json;

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "text";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorCode::Usage, "unknown format '" + std::string(name) + "' (json, csv, text)");
}

std::string tool_version() { return HSO_VERSION; }

std::string format_number(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string header_line(const OutputHeader& h) {
  return "# hso " + tool_version() + " | tolerance " + format_number(h.tolerance) + " | theorem " + h.theorem;
}

json to_json(const OutputHeader& h) {
  return {{"tool", "hso"}, {"version", tool_version()}, {"tolerance", h.tolerance}, {"theorem", h.theorem}};
}

namespace {

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string optional_cell(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

json to_json(const Violation& v) {
  return {{"n", v.n}, {"graph6", v.graph6}, {"value", v.value}, {"reason", v.reason}};
}

json to_json(const OrderExtremum& e) {
  return {{"n", e.n},
          {"count", e.count},
          {"min", {{"value", e.min_value}, {"graphs", e.min_graphs}, {"families", e.min_families},
                   {"expected", e.min_expected}}},
          {"max", {{"value", e.max_value}, {"graphs", e.max_graphs}, {"families", e.max_families},
                   {"expected", e.max_expected}}}};
}

std::string family_tag(const std::vector<std::string>& fams) {
  return fams.empty() ? "[unmatched]" : "[" + join(fams, ", ") + "]";
}

void text_summary(std::ostream& os, const CampaignSummary& s) {
  os << "campaign    " << s.campaign << '\n';
  os << "class       " << s.graph_class << '\n';
  os << "orders      " << s.n_lo << ".." << s.n_hi << '\n';
  os << "examined    " << s.graphs_examined << '\n';
  os << "violations  " << s.violations.size() << '\n';
  for (const auto& e : s.extrema) {
    os << "  n=" << e.n << "  count=" << e.count << "  min=" << format_number(e.min_value) << ' '
       << family_tag(e.min_families) << "  max=" << format_number(e.max_value) << ' ' << family_tag(e.max_families)
       << '\n';
  }
  for (const auto& v : s.violations) {
    os << "VIOLATION n=" << v.n << ' ' << v.graph6 << ' ' << format_number(v.value) << ": " << v.reason << '\n';
  }
  for (const auto& note : s.notes) os << "note: " << note << '\n';
}

}  // namespace

json to_json(const TheoremReport& r) {
  return {{"theorem", to_string(r.theorem)},
          {"graph6", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"value", r.value},
          {"lower", optional_number(r.bound_lower)},
          {"upper", optional_number(r.bound_upper)},
          {"holds", r.holds},
          {"eq_lower", r.equality_lower},
          {"eq_upper", r.equality_upper},
          {"structural_class", r.structural.to_string()},
          {"consistent", r.consistent},
          {"notes", r.notes}};
}

json to_json(const CampaignSummary& s) {
  json violations = json::array();
  for (const auto& v : s.violations) violations.push_back(to_json(v));
  json extrema = json::array();
  for (const auto& e : s.extrema) extrema.push_back(to_json(e));
  return {{"campaign", s.campaign},     {"class", s.graph_class},   {"n_lo", s.n_lo},
          {"n_hi", s.n_hi},             {"graphs_examined", s.graphs_examined},
          {"violations", violations},   {"extrema", extrema},       {"notes", s.notes},
          {"tolerance", s.tolerance}};
}

json to_json(const MonotonicityWitness& w) {
  return {{"n", w.n},
          {"before", w.graph6_before},
          {"after", w.graph6_after},
          {"edge", {w.added_edge.first, w.added_edge.second}},
          {"hso_before", w.hso_before},
          {"hso_after", w.hso_after},
          {"delta", w.delta}};
}

json to_json(const IndexValue& v) {
  json edges = json::array();
  for (const auto& t : v.per_edge) {
    edges.push_back({{"u", t.u}, {"v", t.v}, {"du", t.du}, {"dv", t.dv}, {"term", t.value}});
  }
  return {{"hso", v.hso}, {"so", v.so}, {"edges", edges}};
}

std::string csv_columns() { return "theorem,graph6,value,lower,upper,eq_lower,eq_upper,structural_class,consistent"; }

std::string csv_row(const TheoremReport& r) {
  // graph6 never contains ',' or '"' and the structural tag uses '|'
  auto flag = [](bool b) { return b ? "true" : "false"; };
  return std::string(to_string(r.theorem)) + ',' + r.graph6 + ',' + format_number(r.value) + ',' +
         optional_cell(r.bound_lower) + ',' + optional_cell(r.bound_upper) + ',' + flag(r.equality_lower) + ',' +
         flag(r.equality_upper) + ',' + r.structural.to_string() + ',' + flag(r.consistent);
}

void write_campaign(std::ostream& os, OutputFormat f, const OutputHeader& h, const CampaignResult& result) {
  switch (f) {
    case OutputFormat::Json: {
      json reports = json::array();
      for (const auto& r : result.reports) reports.push_back(to_json(r));
      json doc = {{"header", to_json(h)}, {"summary", to_json(result.summary)}, {"reports", reports}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << header_line(h) << '\n' << csv_columns() << '\n';
      for (const auto& r : result.reports) os << csv_row(r) << '\n';
      break;
    case OutputFormat::Text:
      os << header_line(h) << '\n';
      text_summary(os, result.summary);
      break;
  }
}

void write_summary(std::ostream& os, OutputFormat f, const OutputHeader& h, const CampaignSummary& s) {
  switch (f) {
    case OutputFormat::Json: {
      json doc = {{"header", to_json(h)}, {"summary", to_json(s)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << header_line(h) << '\n' << "n,count,min_value,min_graphs,min_families,max_value,max_graphs,max_families\n";
      for (const auto& e : s.extrema) {
        os << e.n << ',' << e.count << ',' << format_number(e.min_value) << ',' << join(e.min_graphs, " ") << ','
           << join(e.min_families, " ") << ',' << format_number(e.max_value) << ',' << join(e.max_graphs, " ")
           << ',' << join(e.max_families, " ") << '\n';
      }
      break;
    case OutputFormat::Text:
      os << header_line(h) << '\n';
      text_summary(os, s);
      break;
  }
}

void write_witnesses(std::ostream& os, OutputFormat f, const OutputHeader& h,
                     const std::vector<MonotonicityWitness>& ws, double reference_drop) {
  const auto matches = witnesses_with_drop(ws, reference_drop, Tolerance{h.tolerance});
  switch (f) {
    case OutputFormat::Json: {
      json all = json::array();
      for (const auto& w : ws) all.push_back(to_json(w));
      json hits = json::array();
      for (const auto& w : matches) hits.push_back(to_json(w));
      json doc = {{"header", to_json(h)},
                  {"count", ws.size()},
                  {"reference_drop", reference_drop},
                  {"reference_drop_matches", hits},
                  {"witnesses", all}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << header_line(h) << '\n' << "n,before,after,u,v,hso_before,hso_after,delta\n";
      for (const auto& w : ws) {
        os << w.n << ',' << w.graph6_before << ',' << w.graph6_after << ',' << w.added_edge.first << ','
           << w.added_edge.second << ',' << format_number(w.hso_before) << ',' << format_number(w.hso_after) << ','
           << format_number(w.delta) << '\n';
      }
      break;
    case OutputFormat::Text: {
      os << header_line(h) << '\n';
      os << "witnesses   " << ws.size() << '\n';
      int last_n = -1;
      std::size_t per_n = 0;
      auto flush = [&] {
        if (last_n >= 0) os << "  n=" << last_n << "  " << per_n << '\n';
      };
      for (const auto& w : ws) {
        if (w.n != last_n) {
          flush();
          last_n = w.n;
          per_n = 0;
        }
        ++per_n;
      }
      flush();
      if (!ws.empty()) {
        const auto* worst = &ws.front();
        for (const auto& w : ws) {
          if (w.delta < worst->delta) worst = &w;
        }
        os << "largest drop " << format_number(-worst->delta) << "  " << worst->graph6_before << " -> "
           << worst->graph6_after << '\n';
      }
      os << "drop " << format_number(reference_drop) << " matched by " << matches.size() << " witness(es)\n";
      for (const auto& w : matches) os << "  " << w.graph6_before << " -> " << w.graph6_after << '\n';
      break;
    }
  }
}

void write_witness_pairs(std::ostream& os, const OutputHeader& h, const std::vector<MonotonicityWitness>& ws) {
  os << header_line(h) << '\n';
  for (const auto& w : ws) os << w.graph6_before << ' ' << w.graph6_after << '\n';
}

void write_index_text(std::ostream& os, const Graph& g, const IndexValue& v, bool per_edge) {
  os << "n      " << g.order() << '\n';
  os << "m      " << g.size() << '\n';
  os << "Delta  " << g.max_degree() << '\n';
  os << "delta  " << g.min_degree() << '\n';
  os << "class  " << to_string(classify(g)) << '\n';
  os << "SO     " << format_number(v.so) << '\n';
  os << "HSO    " << format_number(v.hso) << '\n';
  if (!per_edge) return;
  for (const auto& t : v.per_edge) {
    os << "  " << t.u << '-' << t.v << "  (" << t.du << ',' << t.dv << ")  " << format_number(t.value) << '\n';
  }
}

}  // namespace hso
