#pragma once

// Test helpers. The brute-force routines here deliberately avoid the
// library's canonical form and enumerator so they can act as oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hso/graph.hpp"

namespace hso::test {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Upper-triangle pair list in graph6 order.
inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) out.emplace_back(u, v);
  }
  return out;
}

inline bool mask_connected(int n, const std::vector<std::uint32_t>& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

/// Labeled connected graphs on n vertices (optionally with exactly m edges),
/// counted by filtering every subset of the pair set.
inline std::uint64_t labeled_connected_count(int n, std::optional<int> m = std::nullopt) {
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> adj(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (m && std::popcount(mask) != *m) continue;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        adj[pairs[i].first] |= 1u << pairs[i].second;
        adj[pairs[i].second] |= 1u << pairs[i].first;
      }
    }
    if (mask_connected(n, adj)) ++count;
  }
  return count;
}

/// |Aut(G)| by trying all n! permutations.
inline std::uint64_t automorphism_count(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Smallest adjacency bit string over all relabelings: an exact but slow
/// isomorphism invariant, fine for n <= 6.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  const int n = g.order();
  const auto pairs = all_pairs(n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (g.has_edge(p[pairs[i].first], p[pairs[i].second])) code |= std::uint64_t{1} << i;
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Frozen reference counts: free trees, connected graphs.
inline constexpr std::uint64_t kFreeTrees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
inline constexpr std::uint64_t kConnected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
inline constexpr std::uint64_t kUnicyclic[] = {0, 0, 0, 1, 2, 5, 13, 33, 89, 240};
inline constexpr std::uint64_t kBicyclic[] = {0, 0, 0, 0, 1, 5, 19, 67, 236, 797};

}  // namespace hso::test
