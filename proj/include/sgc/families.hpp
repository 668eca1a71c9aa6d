#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

enum class Family { Cylinder, Mycielski, BQOdd, BQEven, BM, MobiusLadder, SConstruction };

std::string_view to_string(Family f);
// Accepts the CLI spellings: cylinder, mycielski, bq-odd, bq-even, bm, mobius, s-of.
Family parse_family(std::string_view name);

// `k` is the family's own parameter: the cycle length for Cylinder, and the
// half-parameter for the others (Mycielski on C_{2k+1}, BQ(ell, 2k+1),
// BQ(ell, 2k), BM(ell, 2k), Moebius ladder on 4k vertices). For
// SConstruction, `k` is the order of the complete base graph K_k.
struct FamilyParams {
  Family family = Family::Cylinder;
  int ell = 1;
  int k = 3;
};

// Throws Error{BadParams} when the parameters fall outside the family's domain.
void check_params(const FamilyParams& p);

// Cyclic successor arithmetic on 1-based indices: wrap(j, k) in 1..k.
constexpr int wrap(int j, int k) noexcept { return ((j - 1) % k + k) % k + 1; }

// Vertex id of v_{layer,index} in every grid-based family.
constexpr int grid_id(int layer, int index, int k) noexcept {
  return (layer - 1) * k + (index - 1);
}

SignedGraph cylinder(int ell, int k);
SignedGraph mycielski_cycle(int ell, int k);  // M_ell(C_{2k+1}), all negative
SignedGraph bq_odd(int ell, int k);           // BQ(ell, 2k+1)
SignedGraph bq_even(int ell, int k);          // BQ(ell, 2k)
SignedGraph bm(int ell, int k);               // BM(ell, 2k)
SignedGraph mobius_ladder(int k);             // C_{4k} plus the 2k long diagonals
SignedGraph complete_graph(int n);            // (K_n, -)

// Replaces each edge uv by the 4-cycle u x v y with u-x positive and the
// other three edges negative. Original vertices keep their ids; the pair for
// the i-th edge (in sorted edge order) gets ids n + 2i and n + 2i + 1.
SignedGraph s_construction(const SignedGraph& g);

SignedGraph make_family(const FamilyParams& p);

// Checks that every Grid/Rung label lies inside the ranges implied by `p`.
std::vector<std::string> validate_family(const SignedGraph& g, const FamilyParams& p);

// Expected vertex count for the parameters.
int family_order(const FamilyParams& p);

}  // namespace sgc
