#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hso/graph.hpp"

namespace hso {

/// Decodes one graph6 record (short header form, 1 <= n <= 62).
///
/// Errors: MalformedHeader for an empty string, a long-form or zero-order
/// header, or a body longer than the order implies; TruncatedBody when the
/// body is short; IllegalCharacter for bytes outside 63..126 or non-zero
/// padding bits.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Reads one graph per non-blank line. Lines starting with '#' and the
/// optional ">>graph6<<" prefix are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace hso
