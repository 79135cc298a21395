#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace hso {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Largest order a Graph can hold; one 64-bit adjacency row per vertex and
// the short graph6 header both stop here.
inline constexpr int kMaxOrder = 62;

enum class GraphClass { Tree, Unicyclic, Bicyclic, OtherConnected, Disconnected };

std::string_view to_string(GraphClass c);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex and degrees are cached.
/// Values are immutable: `with_edge` / `without_edge` return new graphs.
class Graph {
 public:
  /// Edgeless graph of order n (1 <= n <= kMaxOrder).
  explicit Graph(int n);

  /// Throws OutOfRange, SelfLoop or DuplicateEdge.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  /// Builds from adjacency rows; rows must be symmetric with a zero diagonal.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::uint64_t row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
  std::span<const int> degrees() const noexcept { return degrees_; }

  int max_degree() const noexcept;
  int min_degree() const noexcept;
  int pendant_count() const noexcept;
  bool is_regular() const noexcept { return max_degree() == min_degree(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copies with one edge toggled. Throw EdgePresent / EdgeAbsent / SelfLoop.
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
  int edge_count_ = 0;
};

/// Traversal from vertex 0 reaches every vertex; K1 counts as connected.
bool is_connected(const Graph& g);

/// Cyclomatic class of a connected graph, or Disconnected.
GraphClass classify(const Graph& g);

/// Degrees sorted in non-increasing order.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace hso
