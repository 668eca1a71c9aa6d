#pragma once

#include <optional>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

// Signed 2-lift: vertex (v, parity) has id 2v + parity; an edge uv lifts to
// (u,a)-(v,a) when positive and (u,a)-(v,1-a) when negative.
struct DoubleCover {
  int base_order = 0;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor ids

  int order() const noexcept { return static_cast<int>(adjacency.size()); }
  int size() const noexcept;
  static constexpr int id(int v, int parity) noexcept { return 2 * v + parity; }
  static constexpr int parity_swap(int x) noexcept { return x ^ 1; }
};

DoubleCover double_cover(const SignedGraph& g);

// Shortest cycle of the requested sign class; `length` absent means none
// exists. The witness is a simple cycle of `length` with negative sign.
struct GirthResult {
  std::optional<int> length;
  std::optional<CycleSeq> witness;
};

// BFS from (v,0) to (v,1) in the double cover for every v. The witness is the
// lexicographically smallest shortest negative cycle, rotated to start at its
// smallest vertex.
GirthResult negative_girth(const SignedGraph& g);

// Shortest odd cycle of an all-negative graph. Throws Error{HasPositiveEdge}.
GirthResult odd_girth(const SignedGraph& g);

// Oracle: depth-first enumeration of simple cycles (each rooted at its
// smallest vertex), keeping the shortest one with negative sign. Throws
// Error{TooLarge} for n > 14.
GirthResult brute_force_negative_girth(const SignedGraph& g);

// Reduces a negative closed walk to a negative simple cycle it contains.
std::vector<int> negative_subcycle(const SignedGraph& g, std::vector<int> walk);

}  // namespace sgc
