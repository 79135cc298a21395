#include <doctest.h>

#include <cmath>

#include "hso/canonical.hpp"
#include "hso/error.hpp"
#include "hso/families.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"
#include "hso/search.hpp"

using namespace hso;
using doctest::Approx;

TEST_CASE("monotonicity at n_max = 3 is exactly the P3 -> C3 pair") {
  const auto ws = find_monotonicity_counterexamples(3);
  REQUIRE(ws.size() == 1);
  const auto& w = ws[0];
  CHECK(are_isomorphic(parse_graph6(w.graph6_before), build(FamilySpec::path(3))));
  CHECK(are_isomorphic(parse_graph6(w.graph6_after), build(FamilySpec::cycle(3))));
  CHECK(w.hso_before == Approx(2 * std::sqrt(5.0)));
  CHECK(w.hso_after == Approx(3 * std::sqrt(2.0)));
  CHECK(w.delta == Approx(3 * std::sqrt(2.0) - 2 * std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("monotonicity witnesses revalidate from scratch") {
  const auto ws = find_monotonicity_counterexamples(6);
  CHECK_FALSE(ws.empty());
  int last_n = 0;
  for (const auto& w : ws) {
    const Graph before = parse_graph6(w.graph6_before);
    const Graph after = parse_graph6(w.graph6_after);
    CHECK(is_connected(before));
    CHECK(w.n == before.order());
    CHECK(w.n >= last_n);
    last_n = w.n;
    CHECK(before.with_edge(w.added_edge.first, w.added_edge.second) == after);
    CHECK(are_isomorphic(after.without_edge(w.added_edge.first, w.added_edge.second), before));
    const double b = hso_value(before);
    const double a = hso_value(after);
    CHECK(std::abs((a - b) - w.delta) <= 1e-12);
    CHECK(w.delta < -1e-9 * std::max(1.0, b));
  }
}

TEST_CASE("monotonicity search bounds") {
  CHECK_THROWS_AS(find_monotonicity_counterexamples(9), Error);
  CHECK_THROWS_AS(find_monotonicity_counterexamples(2), Error);
  try {
    find_monotonicity_counterexamples(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("witness filter by drop size") {
  const auto ws = find_monotonicity_counterexamples(5);
  const double drop = 2 * std::sqrt(5.0) - 3 * std::sqrt(2.0);
  const auto hits = witnesses_with_drop(ws, drop);
  // P3 -> K3, and the same local move inside larger graphs
  REQUIRE(hits.size() == 3);
  CHECK(hits[0].n == 3);
  for (const auto& w : hits) CHECK(w.delta == Approx(-drop));
  CHECK(witnesses_with_drop(ws, 1000.0).empty());
}

TEST_CASE("star maximiser examples") {
  auto s = check_conjecture_star_max(4);
  CHECK(s.clean());
  REQUIRE(s.extrema.size() == 1);
  CHECK(s.extrema[0].count == 6);
  CHECK(s.extrema[0].max_value == Approx(3 * std::sqrt(10.0)));
  CHECK(s.extrema[0].max_families == std::vector<std::string>{"star:4"});

  s = check_conjecture_star_max(5);
  CHECK(s.graphs_examined == 21);
  CHECK(s.extrema[0].max_value == Approx(4 * std::sqrt(17.0)));
  CHECK(s.extrema[0].max_graphs.size() == 1);

  s = check_conjecture_star_max(2);
  CHECK(s.extrema[0].max_value == Approx(std::sqrt(2.0)));
  CHECK(s.extrema[0].max_expected);
  CHECK_THROWS_AS(check_conjecture_star_max(9), Error);
  CHECK_THROWS_AS(check_conjecture_star_max(1), Error);
}

TEST_CASE("extremal table examples") {
  auto s = extremal_table(EnumClass::Tree, 4, 10);
  REQUIRE(s.extrema.size() == 7);
  for (const auto& e : s.extrema) {
    CHECK(e.min_families == std::vector<std::string>{"path:" + std::to_string(e.n)});
    CHECK(e.max_families == std::vector<std::string>{"star:" + std::to_string(e.n)});
  }
  s = extremal_table(EnumClass::Bicyclic, 5, 9);
  for (const auto& e : s.extrema) {
    CHECK(e.max_families == std::vector<std::string>{"sdprime:" + std::to_string(e.n)});
    CHECK(e.min_expected);
  }
  s = extremal_table(EnumClass::Unicyclic, 3, 9);
  for (const auto& e : s.extrema) {
    CHECK(e.min_graphs.size() == 1);
    CHECK(e.min_families == std::vector<std::string>{"cycle:" + std::to_string(e.n)});
  }
  CHECK(s.notes.empty());
  CHECK_THROWS_AS(extremal_table(EnumClass::AllConnected, 8, 9), Error);
}

TEST_CASE("extremal table on an empty class records a note") {
  const auto s = extremal_table(EnumClass::Bicyclic, 3, 4);
  CHECK(s.extrema.size() == 1);
  CHECK(s.notes.size() == 1);
}
