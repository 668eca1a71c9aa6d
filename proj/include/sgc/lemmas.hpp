#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/winding.hpp"

namespace sgc {

enum class Lemma {
  NonCrossing,      // far-polar C_n: non-crossing exact-square edges under c^sh are even
  EvenCycleParity,  // colorings of (C_2m,-), r < 4: both exact-square halves share winding parity
  OddSquareOdd,     // far-polar odd C_n: w(C_n^#2, c^sh) is odd
  StarZero,         // star colorings at r < 4: any cycle on the leaves winds 0 under c^sh
  C4Two,            // far-polar C_4: |w(C_4, c^D)| = 2
  GreenParity,      // far-polar C_2k: green edges ~ bichromatic odd (and even) positions, mod 2
  Zigzag4k,         // far-polar C_4k: green edges ~ w(C_4k^#2e, c^sh) ~ w(C_4k^#2o, c^sh), mod 2
  MobiusOdd,        // far-polar Moebius ladder M_2k: w(C_4k^#2e, c^sh) and w(C_4k^#2o, c^sh) are odd
};

std::string_view to_string(Lemma lemma);
// CLI spellings: noncrossing, even-cycle-parity, odd-square-odd, star-zero,
// c4-two, green-parity, zigzag-4k, mobius-odd.
Lemma parse_lemma(std::string_view name);
std::vector<Lemma> all_lemmas();

// Parameter meaning per lemma: cycle length n for NonCrossing, EvenCycleParity
// and OddSquareOdd; number of leaves for StarZero; k for GreenParity (C_2k),
// Zigzag4k (C_4k) and MobiusOdd (M_2k); ignored for C4Two.
std::vector<int> default_lemma_params(Lemma lemma);

struct Counterexample {
  int param = 0;
  std::uint64_t trial = 0;
  std::string detail;
  std::optional<CycleMap> mapping;  // absent when the trial failed before sampling
};

struct LemmaReport {
  Lemma lemma = Lemma::NonCrossing;
  std::vector<int> params;
  std::uint64_t seed = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  std::vector<Counterexample> counterexamples;  // at most kMaxCounterexamples
  std::map<std::string, int> tallies;           // observed statistic -> count

  static constexpr std::size_t kMaxCounterexamples = 16;
};

// Runs `trials` independent trials; trial t uses params[t % params.size()]
// and its own RNG stream derived from (seed, t). Throws Error{BadLemmaParams}.
LemmaReport lemma_suite(Lemma lemma, const std::vector<int>& params, int trials, std::uint64_t seed);

std::string lemma_report_to_json(const LemmaReport& report);

// Random far-polar map of C_n: consecutive images at circular distance > r/4,
// then a random walk of single-image moves that keep the map far-polar.
CycleMap random_far_polar_cycle(int n, std::mt19937_64& rng);

// Random far-polar images of `g`: a solver-sampled coloring at some r < 4,
// refined and perturbed by far-polarity-preserving single-vertex moves.
// `g` must be all-negative and have a coloring below 4.
std::vector<Rational> random_far_polar_graph(const SignedGraph& g, CircleR& circle, std::mt19937_64& rng);

}  // namespace sgc
