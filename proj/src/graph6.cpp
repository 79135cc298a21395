#include "hso/graph6.hpp"

#include <string>

#include "hso/error.hpp"

namespace hso {

namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw Error(ErrorCode::MalformedHeader, "long-form header (n > 62) unsupported");
  if (header < kBias + 1 || header > 126) {
    throw Error(ErrorCode::MalformedHeader, "header byte " + std::to_string(header));
  }
  const int n = header - kBias;
  const std::string_view body = text.substr(1);
  const std::size_t need = body_length(n);
  if (body.size() < need) {
    throw Error(ErrorCode::TruncatedBody, "expected " + std::to_string(need) + " body bytes, got " +
                                              std::to_string(body.size()));
  }
  if (body.size() > need) {
    throw Error(ErrorCode::MalformedHeader, "body longer than order " + std::to_string(n) + " implies");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit_at = [&](std::size_t index) {
    const int c = static_cast<unsigned char>(body[index / 6]) - kBias;
    return (c >> (5 - static_cast<int>(index % 6))) & 1;
  };
  for (char ch : body) {
    const int c = static_cast<unsigned char>(ch);
    if (c < kBias || c > 126) throw Error(ErrorCode::IllegalCharacter, "byte " + std::to_string(c));
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) edges.emplace_back(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    if (bit_at(k)) throw Error(ErrorCode::IllegalCharacter, "non-zero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = trim(line);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty() || s.front() == '#') continue;
    out.push_back(parse_graph6(s));
  }
  return out;
}

}  // namespace hso
