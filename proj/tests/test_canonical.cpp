#include <doctest.h>

#include <random>
#include <vector>

#include "hso/canonical.hpp"
#include "hso/families.hpp"
#include "hso/graph6.hpp"
#include "support.hpp"

using namespace hso;

TEST_CASE("canonical form examples") {
  const Graph p3 = build(FamilySpec::path(3));
  const std::vector<int> perm{2, 0, 1};
  CHECK(canonical_form(p3) == canonical_form(p3.relabeled(perm)));
  CHECK(canonical_form(p3) != canonical_form(build(FamilySpec::cycle(3))));
  CHECK(canonical_form(build(FamilySpec::star(4))) != canonical_form(build(FamilySpec::path(4))));
}

TEST_CASE("canonical form helpers agree") {
  const Graph g = build(FamilySpec::triangle_pendants(2, 1, 0));
  const CanonicalForm c = canonical_form(g);
  CHECK(c.n == 6);
  CHECK(c.bit_count() == 15);
  CHECK(c.bit_string().size() == 15);
  CHECK(canonical_form(g.rows()) == c);
  CHECK(c.to_graph() == canonical_graph(g));
  CHECK(c.to_graph6() == to_graph6(canonical_graph(g)));
  CHECK(canonical_graph(g) == g.relabeled(canonical_labeling(g)));
  CHECK(canonical_form(c.to_graph()) == c);
}

TEST_CASE("orders compare before bits") {
  CHECK(canonical_form(Graph(3)) < canonical_form(Graph(4)));
}

TEST_CASE("property: invariance under random relabelings, n <= 7") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = test::random_graph(n, 0.2 + 0.015 * trial, rng);
      const CanonicalForm c = canonical_form(g);
      for (int k = 0; k < 20; ++k) {
        const auto perm = test::random_permutation(n, rng);
        CHECK(canonical_form(g.relabeled(perm)) == c);
      }
    }
  }
}

TEST_CASE("property: invariance on larger regular and symmetric graphs") {
  std::mt19937_64 rng(5);
  const std::vector<Graph> hard{
      build(FamilySpec::cycle(12)), build(FamilySpec::complete(9)),
      build(FamilySpec::c_prime(6, 6)), build(FamilySpec::c_double_prime(5, 7)),
      // Petersen graph
      Graph::from_edge_list(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                                  {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}),
  };
  for (const auto& g : hard) {
    const CanonicalForm c = canonical_form(g);
    for (int k = 0; k < 20; ++k) CHECK(canonical_form(g.relabeled(test::random_permutation(g.order(), rng))) == c);
  }
}

TEST_CASE("oracle: equal codes exactly when brute-force isomorphic, n <= 6") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 150; ++trial) {
      const Graph a = test::random_graph(n, 0.5, rng);
      const Graph b = test::random_graph(n, 0.5, rng);
      const bool iso = test::brute_canonical_code(a) == test::brute_canonical_code(b);
      CHECK(iso == (canonical_form(a) == canonical_form(b)));
      CHECK(iso == are_isomorphic(a, b));
    }
  }
}
