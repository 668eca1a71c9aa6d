#include <doctest.h>

#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/girth.hpp"
#include "sgc/signed_graph.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("build_graph basics") {
  auto k2 = build_graph(2, {{0, 1, Sign::Negative}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.all_negative());
  CHECK(k2.sign_between(1, 0) == Sign::Negative);
  CHECK(std::holds_alternative<PlainLabel>(k2.label(1)));

  auto c3 = build_graph(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Negative}, {0, 2, Sign::Negative}});
  CHECK(c3.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);
}

TEST_CASE("build_graph rejects non-simple input") {
  CHECK(code_of([] { build_graph(2, {{0, 1, Sign::Negative}, {0, 1, Sign::Positive}}); }) ==
        ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph(2, {{0, 1, Sign::Negative}, {1, 0, Sign::Negative}}); }) ==
        ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph(2, {{1, 1, Sign::Negative}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { build_graph(2, {{0, 2, Sign::Negative}}); }) == ErrorCode::BadEndpoint);
  CHECK(code_of([] { build_graph(2, {{-1, 0, Sign::Negative}}); }) == ErrorCode::BadEndpoint);
}

TEST_CASE("edges are normalized and sorted") {
  auto g = build_graph(4, {{3, 1, Sign::Positive}, {2, 0, Sign::Negative}, {1, 0, Sign::Negative}});
  std::vector<Edge> want{{0, 1, Sign::Negative}, {0, 2, Sign::Negative}, {1, 3, Sign::Positive}};
  CHECK(g.edges() == want);
}

TEST_CASE("validate reports violations") {
  GraphData ok{3, {}, {{0, 1, Sign::Negative}}};
  CHECK(validate(ok).empty());
  GraphData bad{3, {}, {{0, 5, Sign::Negative}}};
  CHECK(validate(bad).size() == 1);
  GraphData two{3, {}, {{0, 5, Sign::Negative}, {1, 1, Sign::Positive}}};
  CHECK(validate(two).size() == 2);
}

TEST_CASE("switching") {
  std::mt19937_64 rng(11);
  auto g = test::random_signed_graph(8, 0.5, rng);
  CHECK(switching(g, std::vector<int>{}) == g);
  auto s = test::random_subset(8, rng);
  CHECK(switching(switching(g, s), s) == g);
  CHECK(code_of([&] { switching(g, std::vector<int>{8}); }) == ErrorCode::BadVertex);

  // Every edge leaving the cut flips, the rest keep their sign.
  auto h = switching(g, s);
  std::vector<char> in(8, 0);
  for (int v : s) in[v] = 1;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    const Sign want = in[e.u] != in[e.v] ? flipped(e.sign) : e.sign;
    CHECK(h.edges()[i].sign == want);
  }
}

TEST_CASE("switching BQ(4,4) at the first two columns of layers 1 and 2") {
  auto g = bq_even(4, 2);
  std::vector<int> cut{grid_id(1, 1, 4), grid_id(2, 1, 4), grid_id(1, 2, 4), grid_id(2, 2, 4)};
  auto h = switching(g, cut);
  // chords j -- j+2 on the first two layers
  for (int layer = 1; layer <= 2; ++layer) {
    for (int j = 1; j <= 2; ++j) {
      CHECK(h.sign_between(grid_id(layer, j, 4), grid_id(layer, j + 2, 4)) == Sign::Positive);
    }
  }
  int positives = 0;
  for (const auto& e : h.edges()) positives += e.sign == Sign::Positive;
  CHECK(positives > 4);  // cylinder edges crossing the cut flip as well
}

TEST_CASE("switching preserves cycle signs and negative girth") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    auto g = test::random_signed_graph(n, 0.45, rng);
    auto h = switching(g, test::random_subset(n, rng));
    for (const auto& cyc : test::all_cycles(g)) {
      REQUIRE(cycle_sign(g, cyc) == cycle_sign(h, cyc));
    }
    CHECK(negative_girth(g).length == negative_girth(h).length);
  }
}

TEST_CASE("is_bipartite") {
  auto c4 = build_graph(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}, {2, 3, Sign::Negative},
                            {3, 0, Sign::Positive}});
  auto b = is_bipartite(c4);
  REQUIRE(b);
  CHECK(b->part(0).size() == 2);
  CHECK(b->part(1).size() == 2);
  CHECK_FALSE(is_bipartite(test::negative_cycle(3)));

  // BQ(2,3) is K_{3,4} with a matching: parts of 3 and 4.
  auto bq = is_bipartite(bq_odd(2, 1));
  REQUIRE(bq);
  auto small = std::min(bq->part(0).size(), bq->part(1).size());
  auto large = std::max(bq->part(0).size(), bq->part(1).size());
  CHECK(small == 3);
  CHECK(large == 4);
}

TEST_CASE("is_bipartite agrees with odd-cycle enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    auto g = test::random_signed_graph(n, 0.3, rng);
    bool odd = false;
    for (const auto& cyc : test::all_cycles(g)) odd |= cyc.size() % 2 == 1;
    auto b = is_bipartite(g);
    REQUIRE(b.has_value() == !odd);
    if (b) {
      for (const auto& e : g.edges()) CHECK(b->side[e.u] != b->side[e.v]);
    }
  }
}

TEST_CASE("CycleSeq validation") {
  CHECK(code_of([] { CycleSeq({0, 1}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { CycleSeq({0, 1, 0}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { CycleSeq({0, -1, 2}); }) == ErrorCode::BadParams);
  CycleSeq c({4, 7, 9});
  CHECK(c.at_cyclic(3) == 4);
  CHECK(c.at_cyclic(-1) == 9);
}

TEST_CASE("exact_square") {
  auto c5 = exact_square(CycleSeq({0, 1, 2, 3, 4}));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].vertices() == std::vector<int>{0, 2, 4, 1, 3});

  auto c6 = exact_square(CycleSeq({0, 1, 2, 3, 4, 5}));
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].vertices() == std::vector<int>{0, 2, 4});
  CHECK(c6[1].vertices() == std::vector<int>{1, 3, 5});

  CHECK(code_of([] { exact_square(CycleSeq({0, 1, 2, 3})); }) == ErrorCode::DegenerateSquare);

  // Odd squares are cycles on the same vertices joining distance-2 pairs.
  for (int m : {3, 5, 7, 9, 11}) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[i] = 10 + i;
    auto sq = exact_square(CycleSeq(v));
    REQUIRE(sq.size() == 1);
    auto sorted = sq[0].vertices();
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == v);
    for (int i = 0; i < m; ++i) {
      const int a = sq[0].at_cyclic(i) - 10, b = sq[0].at_cyclic(i + 1) - 10;
      CHECK(((b - a) % m + m) % m == 2);
    }
  }
}

TEST_CASE("cycle_sign") {
  auto g = build_graph(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}, {0, 2, Sign::Positive}});
  CHECK(cycle_sign(g, std::vector<int>{0, 1, 2}) == Sign::Negative);
  auto path = build_graph(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Negative}});
  CHECK_FALSE(cycle_sign(path, std::vector<int>{0, 1, 2}));
}

TEST_CASE("labels print") {
  CHECK(to_string(VertexLabel{GridLabel{2, 3}}) == "v2,3");
  CHECK(to_string(VertexLabel{ApexLabel{}}) == "u");
  CHECK(to_string(VertexLabel{RungLabel{4}}) == "u4");
}
