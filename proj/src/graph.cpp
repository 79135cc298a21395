#include "hso/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hso/error.hpp"

namespace hso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgePresent: return "EdgePresent";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBody: return "TruncatedBody";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::DegreeExceedsDelta: return "DegreeExceedsDelta";
    case ErrorCode::K2Edge: return "K2Edge";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::InfeasibleEdgeCount: return "InfeasibleEdgeCount";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::NotBicyclic: return "NotBicyclic";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Bicyclic: return "bicyclic";
    case GraphClass::OtherConnected: return "other-connected";
    case GraphClass::Disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
  degrees_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") outside order " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    if (g.rows_[u] & bit(v)) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
    ++g.degrees_[u];
    ++g.degrees_[v];
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const int n = g.order();
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
  int twice_m = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = rows[v];
    if ((r & ~mask) != 0) throw Error(ErrorCode::OutOfRange, "row bits beyond order");
    if (r & bit(v)) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(v));
    g.rows_[v] = r;
    g.degrees_[v] = std::popcount(r);
    twice_m += g.degrees_[v];
  }
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t r = g.rows_[v]; r; r &= r - 1) {
      int u = std::countr_zero(r);
      if (!(g.rows_[u] & bit(v))) throw Error(ErrorCode::InvalidParameters, "asymmetric rows");
    }
  }
  g.edge_count_ = twice_m / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(v) + " outside order " + std::to_string(order()));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] & bit(v)) != 0;
}

int Graph::max_degree() const noexcept { return *std::max_element(degrees_.begin(), degrees_.end()); }

int Graph::min_degree() const noexcept { return *std::min_element(degrees_.begin(), degrees_.end()); }

int Graph::pendant_count() const noexcept {
  return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), 1));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t r = rows_[u] & ~((bit(u) << 1) - 1); r; r &= r - 1) {
      out.emplace_back(u, std::countr_zero(r));
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  if (rows_[u] & bit(v)) {
    throw Error(ErrorCode::EdgePresent, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Graph g = *this;
  g.rows_[u] |= bit(v);
  g.rows_[v] |= bit(u);
  ++g.degrees_[u];
  ++g.degrees_[v];
  ++g.edge_count_;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  if (!(rows_[u] & bit(v))) {
    throw Error(ErrorCode::EdgeAbsent, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Graph g = *this;
  g.rows_[u] &= ~bit(v);
  g.rows_[v] &= ~bit(u);
  --g.degrees_[u];
  --g.degrees_[v];
  --g.edge_count_;
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::InvalidParameters, "permutation size differs from order");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p))) {
      throw Error(ErrorCode::InvalidParameters, "not a permutation");
    }
    seen |= bit(p);
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t r = rows_[v]; r; r &= r - 1) {
      rows[perm[v]] |= bit(perm[std::countr_zero(r)]);
    }
  }
  return from_rows(rows);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

GraphClass classify(const Graph& g) {
  if (!is_connected(g)) return GraphClass::Disconnected;
  switch (g.size() - g.order() + 1) {
    case 0: return GraphClass::Tree;
    case 1: return GraphClass::Unicyclic;
    case 2: return GraphClass::Bicyclic;
    default: return GraphClass::OtherConnected;
  }
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.degrees().begin(), g.degrees().end());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace hso
