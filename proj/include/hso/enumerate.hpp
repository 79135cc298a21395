#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hso/graph.hpp"

namespace hso {

enum class EnumClass { Tree, Unicyclic, Bicyclic, AllConnected };

std::string_view to_string(EnumClass c);
/// Accepts tree, unicyclic, bicyclic, connected. Throws Usage.
EnumClass parse_enum_class(std::string_view name);

struct EnumSpec {
  EnumClass cls = EnumClass::AllConnected;
  int n = 1;
  std::optional<int> edge_count;  // only for AllConnected; implied otherwise
};

// Hard caps for exhaustive generation.
inline constexpr int kTreeMaxOrder = 12;
inline constexpr int kConnectedMaxOrder = 9;
inline constexpr int kConnectedDefaultMaxOrder = 8;  // higher needs allow_large

struct EnumOptions {
  int jobs = 1;
  bool allow_large = false;
};

// Every function below returns pairwise non-isomorphic graphs, each in its
// canonical labeling, sorted by canonical form.

/// Free trees by leaf augmentation. Throws OrderTooLarge for n > 12.
std::vector<Graph> trees(int n, const EnumOptions& opt = {});

/// All connected graphs of order n. Throws OrderTooLarge for n > 9, and for
/// n = 9 unless opt.allow_large.
std::vector<Graph> connected_graphs(int n, const EnumOptions& opt = {});

/// Connected graphs with exactly m edges (m = n: unicyclic, m = n + 1:
/// bicyclic). Throws InfeasibleEdgeCount unless n - 1 <= m <= n(n-1)/2 and
/// OrderTooLarge for n > 9 (n > 12 when m = n - 1).
std::vector<Graph> connected_graphs_with_edges(int n, int m, const EnumOptions& opt = {});

std::vector<Graph> enumerate(const EnumSpec& spec, const EnumOptions& opt = {});

}  // namespace hso
