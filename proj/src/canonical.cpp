#include "hso/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "hso/graph6.hpp"

namespace hso {

namespace {

using Rows = std::array<std::uint64_t, 64>;

// Iterated colour refinement. Returns the number of cells; colour[v] is the
// rank of v's cell. Cells are ordered by invariant signatures (higher degree
// first), so the result is a function of the isomorphism class.
int refine(int n, const Rows& adj, std::array<int, 64>& colour) {
  std::array<int, 64> order{};
  std::iota(order.begin(), order.begin() + n, 0);

  std::array<int, 64> deg{};
  for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return deg[a] > deg[b]; });
  int cells = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && deg[order[i]] != deg[order[i - 1]]) ++cells;
    colour[order[i]] = cells;
  }
  ++cells;

  std::array<std::array<int, 64>, 64> counts;
  while (cells < n) {
    std::array<std::uint64_t, 64> members{};
    for (int v = 0; v < n; ++v) members[colour[v]] |= std::uint64_t{1} << v;
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < cells; ++c) counts[v][c] = std::popcount(adj[v] & members[c]);
    }
    auto less = [&](int a, int b) {
      if (colour[a] != colour[b]) return colour[a] < colour[b];
      for (int c = 0; c < cells; ++c) {
        if (counts[a][c] != counts[b][c]) return counts[a][c] > counts[b][c];
      }
      return false;
    };
    std::sort(order.begin(), order.begin() + n, less);
    int next = 0;
    std::array<int, 64> fresh{};
    for (int i = 0; i < n; ++i) {
      if (i > 0 && less(order[i - 1], order[i])) ++next;
      fresh[order[i]] = next;
    }
    ++next;
    colour = fresh;
    if (next == cells) break;
    cells = next;
  }
  return cells;
}

class Search {
 public:
  Search(int n, const Rows& adj) : n_(n), adj_(adj) {
    refine(n_, adj_, colour_);
    std::array<int, 64> sorted{};
    std::iota(sorted.begin(), sorted.begin() + n_, 0);
    std::sort(sorted.begin(), sorted.begin() + n_,
              [&](int a, int b) { return colour_[a] < colour_[b]; });
    for (int k = 0; k < n_; ++k) cell_of_position_[k] = colour_[sorted[k]];

    // Twin classes: vertices whose neighbourhoods agree apart from each other.
    for (int v = 0; v < n_; ++v) {
      twin_[v] = v;
      for (int u = 0; u < v; ++u) {
        const std::uint64_t ignore = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (colour_[u] == colour_[v] && ((adj_[u] ^ adj_[v]) & ~ignore) == 0) {
          twin_[v] = twin_[u];
          break;
        }
      }
    }
  }

  void run() { descend(0, 0, false); }

  std::vector<int> labeling() const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) perm[best_position_[k]] = k;
    return perm;
  }

  CanonicalForm form() const {
    CanonicalForm cf;
    cf.n = n_;
    cf.words.assign((cf.bit_count() + 63) / 64, 0);
    std::size_t i = 0;
    for (int k = 1; k < n_; ++k) {
      for (int p = 0; p < k; ++p, ++i) {
        if ((best_column_[k] >> (63 - p)) & 1) cf.words[i / 64] |= std::uint64_t{1} << (63 - i % 64);
      }
    }
    return cf;
  }

 private:
  // `equal` is true when the current prefix of columns equals the best's.
  void descend(int k, std::uint64_t assigned, bool equal) {
    if (k == n_) {
      if (!have_best_ || !equal) {
        best_column_ = column_;
        best_position_ = position_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    const int cell = cell_of_position_[k];
    std::array<int, 64> cand{};
    int count = 0;
    std::uint64_t tried_twins = 0;
    for (int v = 0; v < n_; ++v) {
      if ((assigned >> v) & 1 || colour_[v] != cell) continue;
      const std::uint64_t t = std::uint64_t{1} << twin_[v];
      if (tried_twins & t) continue;
      tried_twins |= t;
      cand[count++] = v;
    }
    std::sort(cand.begin(), cand.begin() + count, [&](int a, int b) { return acc_[a] > acc_[b]; });

    for (int i = 0; i < count; ++i) {
      const int v = cand[i];
      const std::uint64_t col = acc_[v];
      bool child_equal = false;
      if (have_best_ && equal) {
        if (col < best_column_[k]) break;
        child_equal = col == best_column_[k];
      }
      column_[k] = col;
      position_[k] = v;
      const std::uint64_t mark = std::uint64_t{1} << (63 - k);
      for (std::uint64_t r = adj_[v]; r; r &= r - 1) acc_[std::countr_zero(r)] |= mark;
      const auto before = version_;
      descend(k + 1, assigned | (std::uint64_t{1} << v), child_equal);
      for (std::uint64_t r = adj_[v]; r; r &= r - 1) acc_[std::countr_zero(r)] &= ~mark;
      if (version_ != before) equal = true;
    }
  }

  int n_;
  const Rows& adj_;
  std::array<int, 64> colour_{};
  std::array<int, 64> cell_of_position_{};
  std::array<int, 64> twin_{};
  std::array<std::uint64_t, 64> acc_{};
  std::array<std::uint64_t, 64> column_{};
  std::array<int, 64> position_{};
  std::array<std::uint64_t, 64> best_column_{};
  std::array<int, 64> best_position_{};
  bool have_best_ = false;
  unsigned long version_ = 0;
};

Rows load(const Graph& g) {
  Rows adj{};
  for (int v = 0; v < g.order(); ++v) adj[v] = g.row(v);
  return adj;
}

}  // namespace

std::string CanonicalForm::bit_string() const {
  std::string s;
  s.reserve(bit_count());
  for (std::size_t i = 0; i < bit_count(); ++i) s.push_back(bit(i) ? '1' : '0');
  return s;
}

Graph CanonicalForm::to_graph() const {
  std::vector<Edge> edges;
  std::size_t i = 0;
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k < j; ++k, ++i) {
      if (bit(i)) edges.emplace_back(k, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string CanonicalForm::to_graph6() const { return hso::to_graph6(to_graph()); }

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.n);
  for (std::uint64_t w : c.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<int> canonical_labeling(const Graph& g) {
  const Rows adj = load(g);
  Search s(g.order(), adj);
  s.run();
  return s.labeling();
}

CanonicalForm canonical_form(const Graph& g) {
  const Rows adj = load(g);
  Search s(g.order(), adj);
  s.run();
  return s.form();
}

CanonicalForm canonical_form(std::span<const std::uint64_t> rows) {
  Rows adj{};
  std::copy(rows.begin(), rows.end(), adj.begin());
  Search s(static_cast<int>(rows.size()), adj);
  s.run();
  return s.form();
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hso
