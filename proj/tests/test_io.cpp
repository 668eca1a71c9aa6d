#include <doctest.h>

#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/io.hpp"
#include "support.hpp"

using namespace sgc;

TEST_CASE("SGF layout") {
  auto g = build_graph(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}});
  CHECK(write_sgf(g) == "sg 3 2\ne 0 1 -\ne 1 2 +\n");
  auto grid = write_sgf(mycielski_cycle(1, 1));
  CHECK(grid.find("# v 0 grid 1 1\n") != std::string::npos);
  CHECK(grid.find("# v 3 apex\n") != std::string::npos);
  CHECK(write_sgf(bm(1, 2)).find("# v 5 rung 1\n") != std::string::npos);
}

TEST_CASE("SGF round trip is byte-identical") {
  std::mt19937_64 rng(21);
  std::vector<SignedGraph> corpus{cylinder(3, 5),   mycielski_cycle(2, 2), bq_odd(3, 2),
                                  bq_even(3, 2),    bm(2, 3),              mobius_ladder(3),
                                  s_construction(complete_graph(3))};
  for (int t = 0; t < 50; ++t) corpus.push_back(test::random_signed_graph(1 + t % 12, 0.4, rng));
  for (const auto& g : corpus) {
    const auto text = write_sgf(g);
    const auto back = read_sgf(text);
    CHECK(back == g);
    CHECK(write_sgf(back) == text);
  }
}

TEST_CASE("SGF reader tolerates comments, blank lines and CRLF") {
  auto g = read_sgf("# a triangle\r\n\r\nsg 3 3\r\ne 0 1 -\r\n# middle\ne 1 2 -\ne 2 0 +\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.sign_between(0, 2) == Sign::Positive);
}

TEST_CASE("SGF reader errors") {
  CHECK_THROWS_AS(read_sgf(""), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 2\ne 0 1 -\n"), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 1\ne 0 1 x\n"), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 1\ne 0 2 -\n"), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 2\ne 0 1 -\ne 1 0 +\n"), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 1\nq 0 1 -\n"), Error);
  CHECK_THROWS_AS(read_sgf("sg 2 0\n# v 7 apex\n"), Error);
  CHECK_THROWS_AS(read_sgf_file("/nonexistent/graph.sgf"), Error);
}

TEST_CASE("DOT export") {
  auto g = build_graph(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}});
  auto dot = write_dot(g, "T");
  CHECK(dot.find("graph \"T\" {") != std::string::npos);
  CHECK(dot.find("0 -- 1 [sign=\"-\", style=solid];") != std::string::npos);
  CHECK(dot.find("1 -- 2 [sign=\"+\", style=dashed];") != std::string::npos);
}

TEST_CASE("coloring JSON") {
  Coloring c{PQ{8, 3}, {0, 3, 6}};
  const auto text = coloring_to_json(c);
  CHECK(text == R"({"p":8,"q":3,"assign":[0,3,6]})");
  auto back = coloring_from_json(text);
  CHECK(back.pq == c.pq);
  CHECK(back.assign == c.assign);
  CHECK_THROWS_AS(coloring_from_json("{\"p\":5,\"q\":2,\"assign\":[]}"), Error);
  CHECK_THROWS_AS(coloring_from_json("[]"), Error);
}
