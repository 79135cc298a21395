#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hso/campaign.hpp"
#include "hso/indices.hpp"
#include "hso/search.hpp"

namespace hso {

enum class OutputFormat { Json, Csv, Text };

std::string_view to_string(OutputFormat f);
/// Throws Usage.
OutputFormat parse_output_format(std::string_view name);

/// Provenance block embedded in every file the tool writes.
struct OutputHeader {
  std::string theorem;  // "none" for plain enumeration
  double tolerance = kDefaultTolerance;
};

std::string tool_version();

/// Shortest representation that round-trips.
std::string format_number(double x);

/// "# hso <version> | tolerance <tol> | theorem <id>"
std::string header_line(const OutputHeader& h);

nlohmann::json to_json(const OutputHeader& h);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const CampaignSummary& s);
nlohmann::json to_json(const MonotonicityWitness& w);
nlohmann::json to_json(const IndexValue& v);

/// theorem,graph6,value,lower,upper,eq_lower,eq_upper,structural_class,consistent
std::string csv_columns();
std::string csv_row(const TheoremReport& r);

void write_campaign(std::ostream& os, OutputFormat f, const OutputHeader& h, const CampaignResult& result);
void write_summary(std::ostream& os, OutputFormat f, const OutputHeader& h, const CampaignSummary& s);
void write_witnesses(std::ostream& os, OutputFormat f, const OutputHeader& h,
                     const std::vector<MonotonicityWitness>& ws, double reference_drop);

/// Two columns per line: graph6 before, graph6 after.
void write_witness_pairs(std::ostream& os, const OutputHeader& h, const std::vector<MonotonicityWitness>& ws);

/// Human-readable lines for `compute`.
void write_index_text(std::ostream& os, const Graph& g, const IndexValue& v, bool per_edge);

}  // namespace hso
