#include "hso/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>
#include <unordered_set>

#include "hso/canonical.hpp"
#include "hso/error.hpp"
#include "hso/parallel.hpp"

namespace hso {

namespace {

using Level = std::vector<CanonicalForm>;
using CodeSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

int max_edges(int n) { return n * (n - 1) / 2; }

void load_rows(const CanonicalForm& cf, std::array<std::uint64_t, 64>& rows) {
  std::fill(rows.begin(), rows.begin() + cf.n, 0);
  std::size_t i = 0;
  for (int j = 1; j < cf.n; ++j) {
    for (int k = 0; k < j; ++k, ++i) {
      if (cf.bit(i)) {
        rows[k] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << k;
      }
    }
  }
}

// Connected graphs with n vertices and m edges, memoised by (n, m). Each
// level is built by adding a vertex of degree k to every connected parent
// with n - 1 vertices and m - k edges; every connected graph has a non-cut
// vertex, so this reaches all of them.
class Generator {
 public:
  explicit Generator(int jobs) : jobs_(jobs) {}

  const Level& level(int n, int m) {
    const auto key = std::make_pair(n, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Level out;
    if (n == 1) {
      if (m == 0) out.push_back(CanonicalForm{1, {}});
    } else {
      struct Item {
        const CanonicalForm* parent;
        int k;
      };
      std::vector<Item> items;
      for (int k = 1; k <= n - 1; ++k) {
        const int pm = m - k;
        if (pm < n - 2 || pm > max_edges(n - 1)) continue;
        for (const auto& p : level(n - 1, pm)) items.push_back({&p, k});
      }
      std::vector<CodeSet> found(static_cast<std::size_t>(std::max(jobs_, 1)));
      parallel_ranges(items.size(), jobs_, [&](std::size_t b, std::size_t e, int worker) {
        auto& set = found[static_cast<std::size_t>(worker)];
        std::array<std::uint64_t, 64> rows{};
        const int v = n - 1;
        for (std::size_t i = b; i < e; ++i) {
          load_rows(*items[i].parent, rows);
          const std::uint64_t base = rows[v];
          const std::uint64_t limit = std::uint64_t{1} << v;
          // Gosper's hack over k-subsets of the parent's vertices.
          for (std::uint64_t s = (std::uint64_t{1} << items[i].k) - 1; s < limit;) {
            rows[v] = s;
            for (std::uint64_t t = s; t; t &= t - 1) rows[std::countr_zero(t)] |= limit;
            set.insert(canonical_form(std::span<const std::uint64_t>(rows.data(), n)));
            for (std::uint64_t t = s; t; t &= t - 1) rows[std::countr_zero(t)] &= ~limit;
            rows[v] = base;
            const std::uint64_t c = s & -s;
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
          }
        }
      });
      CodeSet merged = std::move(found.front());
      for (std::size_t w = 1; w < found.size(); ++w) merged.insert(found[w].begin(), found[w].end());
      out.assign(merged.begin(), merged.end());
      std::sort(out.begin(), out.end());
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  int jobs_;
  std::map<std::pair<int, int>, Level> memo_;
};

std::vector<Graph> materialise(const Level& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(c.to_graph());
  return out;
}

void check_order(int n, int cap, const char* what) {
  if (n < 1) throw Error(ErrorCode::OrderOutOfRange, std::string(what) + " needs n >= 1");
  if (n > cap) {
    throw Error(ErrorCode::OrderTooLarge,
                std::string(what) + " capped at n = " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(EnumClass c) {
  switch (c) {
    case EnumClass::Tree: return "tree";
    case EnumClass::Unicyclic: return "unicyclic";
    case EnumClass::Bicyclic: return "bicyclic";
    case EnumClass::AllConnected: return "connected";
  }
  return "unknown";
}

EnumClass parse_enum_class(std::string_view name) {
  for (auto c : {EnumClass::Tree, EnumClass::Unicyclic, EnumClass::Bicyclic, EnumClass::AllConnected}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::Usage, "unknown class '" + std::string(name) + "'");
}

std::vector<Graph> trees(int n, const EnumOptions& opt) {
  check_order(n, kTreeMaxOrder, "tree enumeration");
  // With m = n - 1 every parent is a tree and the new vertex is a leaf.
  Generator gen(opt.jobs);
  return materialise(gen.level(n, n - 1));
}

std::vector<Graph> connected_graphs(int n, const EnumOptions& opt) {
  check_order(n, kConnectedMaxOrder, "connected enumeration");
  if (n > kConnectedDefaultMaxOrder && !opt.allow_large) {
    throw Error(ErrorCode::OrderTooLarge,
                "connected enumeration at n = " + std::to_string(n) + " requires the large-order opt-in");
  }
  Generator gen(opt.jobs);
  Level all;
  for (int m = n - 1; m <= max_edges(n); ++m) {
    const auto& l = gen.level(n, m);
    all.insert(all.end(), l.begin(), l.end());
  }
  std::sort(all.begin(), all.end());
  return materialise(all);
}

std::vector<Graph> connected_graphs_with_edges(int n, int m, const EnumOptions& opt) {
  // m = n - 1 only ever visits trees, so it shares the tree cap
  check_order(n, m == n - 1 ? kTreeMaxOrder : kConnectedMaxOrder, "edge-constrained enumeration");
  if (m < n - 1 || m > max_edges(n)) {
    throw Error(ErrorCode::InfeasibleEdgeCount,
                "no connected graph has n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
  Generator gen(opt.jobs);
  return materialise(gen.level(n, m));
}

std::vector<Graph> enumerate(const EnumSpec& spec, const EnumOptions& opt) {
  switch (spec.cls) {
    case EnumClass::Tree: return trees(spec.n, opt);
    case EnumClass::Unicyclic:
      if (spec.n < 3) return {};
      return connected_graphs_with_edges(spec.n, spec.n, opt);
    case EnumClass::Bicyclic:
      if (spec.n < 4) return {};
      return connected_graphs_with_edges(spec.n, spec.n + 1, opt);
    case EnumClass::AllConnected:
      if (spec.edge_count) return connected_graphs_with_edges(spec.n, *spec.edge_count, opt);
      return connected_graphs(spec.n, opt);
  }
  return {};
}

}  // namespace hso
