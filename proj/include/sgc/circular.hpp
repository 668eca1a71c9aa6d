#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgc/rational.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

// Circle of circumference r = p/q scaled to Z_p: a point is an integer in
// [0, p) and unit distance becomes q. p is even so the antipode c + p/2 is a
// lattice point.
struct PQ {
  int p = 4;
  int q = 1;

  Rational value() const { return Rational(p, q); }
  friend bool operator==(const PQ&, const PQ&) = default;
};

// Throws Error{BadParams} unless p is even, q >= 1 and p >= 2q.
PQ make_pq(int p, int q);

// Smallest PQ with even p representing r (r >= 2).
PQ pq_for(const Rational& r);

// Distance on Z_p: min(|a-b|, p-|a-b|).
int circular_distance(int a, int b, int p);

struct Coloring {
  PQ pq;
  std::vector<int> assign;
};

// Throws Error{PartialAssignment} if `c` does not color every vertex of `g`
// with a point of Z_p.
bool verify_coloring(const SignedGraph& g, const Coloring& c);

// Shifts every color by t (mod p).
Coloring rotated(const Coloring& c, int t);

struct SearchOptions {
  // When set, value order and the final rotation are randomized from this seed,
  // so repeated calls sample different colorings.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Complete backtracking search with arc-consistency propagation over bitset
// domains. Components are solved independently with their first vertex fixed
// to color 0 (rotation) and the second branching vertex restricted to
// [0, p/2] (reflection).
std::optional<Coloring> decide_colorable(const SignedGraph& g, PQ pq,
                                         const SearchOptions& options = {},
                                         SearchStats* stats = nullptr);

// All rationals a/b with 1 <= b <= q_max and 2 <= a/b <= upper, ascending,
// each in its smallest even-numerator representation.
std::vector<PQ> candidate_grid(int q_max, const Rational& upper);

struct ChiCResult {
  Rational value;
  Coloring certificate;
  std::vector<PQ> refuted;  // every grid candidate strictly below value
  int q_max = 0;
  Rational upper;
  std::uint64_t nodes = 0;
};

struct ChiCOptions {
  std::optional<int> q_max;       // default: number of vertices
  std::optional<Rational> upper;  // default: 4 when bipartite, else 2n
};

// Least colorable grid candidate. Throws Error{NoCandidateColorable} if none
// of the candidates admits a coloring.
ChiCResult chi_c(const SignedGraph& g, const ChiCOptions& options = {});

// Same as chi_c but reports exhaustion as nullopt.
std::optional<ChiCResult> try_chi_c(const SignedGraph& g, const ChiCOptions& options = {});

// Part A to 0, part B to 1 in Z_4 (q = 1). Throws Error{NotBipartite}.
Coloring bipartite_four_coloring(const SignedGraph& g);

// Exhaustive oracle over the same candidate grid: plain enumeration of every
// assignment in vertex-id order (vertex 0 pinned to 0), rejecting a partial
// assignment as soon as an edge to an earlier vertex fails. nullopt when no
// candidate is colorable. Throws Error{TooLarge} for n > 8.
std::optional<Rational> brute_force_chi_c(const SignedGraph& g, int q_max, const Rational& upper);

// Exhaustive decision for a single candidate (same enumeration as above).
std::optional<Coloring> brute_force_colorable(const SignedGraph& g, PQ pq);

}  // namespace sgc
