#include <doctest.h>

#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/circular.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

SignedGraph k2(Sign s) { return build_graph(2, {{0, 1, s}}); }

// Colorability of a candidate by the exhaustive enumerator, n <= 8.
bool oracle_colorable(const SignedGraph& g, PQ pq) { return brute_force_colorable(g, pq).has_value(); }

}  // namespace

TEST_CASE("PQ construction") {
  CHECK(make_pq(4, 1) == PQ{4, 1});
  CHECK_THROWS_AS(make_pq(5, 2), Error);
  CHECK_THROWS_AS(make_pq(2, 2), Error);
  CHECK_THROWS_AS(make_pq(4, 0), Error);
  CHECK(pq_for(Rational(5, 2)) == PQ{10, 4});
  CHECK(pq_for(Rational(8, 3)) == PQ{8, 3});
  CHECK(pq_for(Rational(4)) == PQ{4, 1});
  CHECK_THROWS_AS(pq_for(Rational(3, 2)), Error);
  CHECK(circular_distance(0, 7, 8) == 1);
  CHECK(circular_distance(2, 6, 8) == 4);
}

TEST_CASE("verify_coloring") {
  auto bq = bq_odd(2, 1);
  auto parts = is_bipartite(bq);
  REQUIRE(parts);
  CHECK(verify_coloring(bq, Coloring{PQ{4, 1}, parts->side}));
  CHECK_FALSE(verify_coloring(k2(Sign::Negative), Coloring{PQ{4, 1}, {0, 0}}));
  CHECK(verify_coloring(k2(Sign::Positive), Coloring{PQ{4, 2}, {0, 0}}));
  CHECK_FALSE(verify_coloring(k2(Sign::Positive), Coloring{PQ{4, 2}, {0, 2}}));
  CHECK_THROWS_AS(verify_coloring(k2(Sign::Negative), Coloring{PQ{4, 1}, {0}}), Error);
  CHECK_THROWS_AS(verify_coloring(k2(Sign::Negative), Coloring{PQ{4, 1}, {0, 4}}), Error);
}

TEST_CASE("decide_colorable") {
  auto c = decide_colorable(k2(Sign::Negative), PQ{4, 2});
  REQUIRE(c);
  CHECK(c->assign == std::vector<int>{0, 2});
  CHECK_FALSE(decide_colorable(mycielski_cycle(2, 2), PQ{30, 8}));
  auto bq = decide_colorable(bq_odd(2, 1), PQ{4, 1});
  REQUIRE(bq);
  CHECK(verify_coloring(bq_odd(2, 1), *bq));
  CHECK_FALSE(decide_colorable(test::negative_cycle(5), PQ{4, 2}));
  CHECK(decide_colorable(test::negative_cycle(5), PQ{10, 4}));
}

TEST_CASE("decide_colorable agrees with exhaustive search") {
  std::mt19937_64 rng(8);
  const auto grid = candidate_grid(4, Rational(5));
  for (int t = 0; t < 150; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    auto g = test::random_signed_graph(n, 0.5, rng);
    const PQ pq = grid[std::uniform_int_distribution<std::size_t>(0, grid.size() - 1)(rng)];
    auto fast = decide_colorable(g, pq);
    REQUIRE(fast.has_value() == oracle_colorable(g, pq));
    if (fast) CHECK(verify_coloring(g, *fast));
    // shuffled search decides the same way
    auto shuffled = decide_colorable(g, pq, SearchOptions{rng()});
    CHECK(shuffled.has_value() == fast.has_value());
    if (shuffled) CHECK(verify_coloring(g, *shuffled));
  }
}

TEST_CASE("rotation invariance") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto g = test::random_signed_graph(7, 0.4, rng);
    auto c = decide_colorable(g, PQ{8, 2});
    if (!c) continue;
    for (int shift = 0; shift < 8; ++shift) CHECK(verify_coloring(g, rotated(*c, shift)));
  }
}

TEST_CASE("candidate grid") {
  auto grid = candidate_grid(3, Rational(3));
  std::vector<Rational> values;
  for (const auto& pq : grid) {
    CHECK(pq.p % 2 == 0);
    values.push_back(pq.value());
  }
  std::vector<Rational> want{Rational(2), Rational(7, 3), Rational(5, 2), Rational(8, 3), Rational(3)};
  CHECK(values == want);
  CHECK(grid[1] == PQ{14, 6});
  CHECK_THROWS_AS(candidate_grid(0, Rational(3)), Error);
  CHECK_THROWS_AS(candidate_grid(2, Rational(3, 2)), Error);
}

TEST_CASE("chi_c values") {
  CHECK(chi_c(complete_graph(4)).value == Rational(4));
  CHECK(chi_c(k2(Sign::Negative)).value == Rational(2));
  CHECK(chi_c(k2(Sign::Positive)).value == Rational(2));
  CHECK(chi_c(test::negative_cycle(5)).value == Rational(5, 2));
  CHECK(chi_c(test::negative_cycle(7)).value == Rational(7, 3));
  CHECK(chi_c(complete_graph(3)).value == Rational(3));
  CHECK(chi_c(build_graph(3, {})).value == Rational(2));
  CHECK_THROWS_AS(chi_c(complete_graph(4), ChiCOptions{4, Rational(7, 2)}), Error);
  CHECK_FALSE(try_chi_c(complete_graph(4), ChiCOptions{4, Rational(7, 2)}));

  auto r = chi_c(s_construction(complete_graph(2)));
  CHECK(r.value == Rational(8, 3));
  CHECK(verify_coloring(s_construction(complete_graph(2)), r.certificate));
  for (const auto& pq : r.refuted) CHECK(pq.value() < r.value);
  CHECK(chi_c(s_construction(complete_graph(3))).value == Rational(3));
}

TEST_CASE("S(G) formula at desk scale") {
  for (const auto& g : {complete_graph(2), complete_graph(3), test::negative_cycle(5)}) {
    const Rational base = chi_c(g).value;
    const Rational want = Rational(4) - Rational(4) / (base + Rational(1));
    CHECK(chi_c(s_construction(g)).value == want);
  }
}

TEST_CASE("C4 with one positive edge against the oracle") {
  auto g = build_graph(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}, {2, 3, Sign::Negative},
                           {0, 3, Sign::Negative}});
  const auto fast = chi_c(g, ChiCOptions{4, Rational(8)});
  const auto slow = brute_force_chi_c(g, 4, Rational(8));
  REQUIRE(slow);
  CHECK(fast.value == *slow);
  CHECK(fast.value == Rational(8, 3));  // a negative 4-cycle, like S(K_2)
}

TEST_CASE("bipartite_four_coloring") {
  for (const auto& g : {bq_odd(2, 1), bm(2, 2), bq_odd(3, 2), bm(3, 3)}) {
    auto c = bipartite_four_coloring(g);
    CHECK(c.pq == PQ{4, 1});
    CHECK(verify_coloring(g, c));
  }
  CHECK_THROWS_AS(bipartite_four_coloring(test::negative_cycle(3)), Error);
}

TEST_CASE("signed bipartite family members have chi_c at most 4") {
  for (const auto& g : {bq_odd(2, 1), bq_odd(2, 2), bm(1, 2), s_construction(complete_graph(3))}) {
    auto r = chi_c(g, ChiCOptions{std::min(g.order(), 6), Rational(4)});
    CHECK(r.value <= Rational(4));
    CHECK(verify_coloring(g, r.certificate));
  }
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_chi_c(k2(Sign::Negative), 2, Rational(4)) == Rational(2));
  CHECK(brute_force_chi_c(test::negative_cycle(5), 5, Rational(4)) == Rational(5, 2));
  CHECK_FALSE(brute_force_chi_c(complete_graph(4), 3, Rational(7, 2)));
  CHECK_THROWS_AS(brute_force_chi_c(complete_graph(9), 2, Rational(4)), Error);
}

TEST_CASE("chi_c matches the oracle and colorability is monotone") {
  std::mt19937_64 rng(1234);
  const auto grid = candidate_grid(4, Rational(4));
  for (int t = 0; t < 60; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    auto g = test::random_signed_graph(n, 0.55, rng);
    auto fast = try_chi_c(g, ChiCOptions{4, Rational(4)});
    auto slow = brute_force_chi_c(g, 4, Rational(4));
    REQUIRE((fast ? std::optional<Rational>(fast->value) : std::nullopt) == slow);
    bool seen = false;
    for (const auto& pq : grid) {
      const bool ok = decide_colorable(g, pq).has_value();
      CHECK((!seen || ok));
      seen |= ok;
    }
  }
}
