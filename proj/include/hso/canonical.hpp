#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hso/graph.hpp"

namespace hso {

/// Relabeling-invariant code of a graph.
///
/// The bits are the upper triangle of the adjacency matrix in graph6 order
/// (0,1),(0,2),(1,2),(0,3),... under the canonical vertex ordering, packed
/// MSB-first into 64-bit words. Two graphs share a code iff they are
/// isomorphic. Codes of different orders compare by order first.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> words;

  std::size_t bit_count() const { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  bool bit(std::size_t i) const { return (words[i / 64] >> (63 - i % 64)) & 1; }

  std::string bit_string() const;
  /// graph6 text of the canonically labeled graph.
  std::string to_graph6() const;
  Graph to_graph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

/// perm[v] is the canonical position of vertex v.
///
/// Positions are confined to cells of an isomorphism-invariant colour
/// refinement seeded by degree, and the code is the lexicographic maximum
/// over the remaining orderings (branch and bound on graph6-order columns,
/// with interchangeable twin vertices explored once).
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Same code computed straight from symmetric adjacency rows, skipping the
/// Graph value; used on hot enumeration paths.
CanonicalForm canonical_form(std::span<const std::uint64_t> rows);

/// The graph relabeled by canonical_labeling.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace hso
