// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sgc/circular.hpp"
#include "sgc/families.hpp"
#include "sgc/girth.hpp"
#include "sgc/lemmas.hpp"
#include "sgc/winding.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] %d %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Shared corpus for criteria 5 and 8: 100 random signed graphs on at most 7 vertices.
std::vector<SignedGraph> small_corpus() {
  std::mt19937_64 rng(20240607);
  std::vector<SignedGraph> out;
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    out.push_back(test::random_signed_graph(n, density, rng));
  }
  return out;
}

void girth_sweep() {
  const auto t0 = Clock::now();
  int checked = 0, bad = 0;
  for (int ell = 2; ell <= 5; ++ell) {
    for (int k = 1; k <= 5; ++k) {
      auto expect = [&](const SignedGraph& g, int want, bool odd) {
        ++checked;
        const auto r = odd ? odd_girth(g) : negative_girth(g);
        if (r.length != want) {
          ++bad;
          std::printf("    ell=%d k=%d got %d want %d\n", ell, k, r.length.value_or(-1), want);
        }
      };
      expect(bq_odd(ell, k), std::min(2 * ell, 2 * k + 2), false);
      expect(mycielski_cycle(ell, k), std::min(2 * k + 1, 2 * ell + 1), true);
      if (k >= 2) {
        expect(bq_even(ell, k), std::min(2 * ell - 1, 2 * k + 1), false);
        expect(bm(ell, k), std::min(2 * ell + 2, 2 * k), false);
      }
    }
  }
  const double s = seconds_since(t0);
  report(1, bad == 0 && s < 10.0,
         "girth sweep: " + std::to_string(checked - bad) + "/" + std::to_string(checked) +
             " exact, " + std::to_string(s) + " s (limit 10 s)");
}

void order_claim() {
  bool ok = true;
  for (int k = 2; k <= 6; ++k) {
    ok &= bq_odd(k, k - 1).order() == 2 * k * k - k + 1;
    ok &= bm(k - 1, k).order() == 2 * k * k - k + 1;
  }
  report(2, ok, "BQ(k,2k-1) and BM(k-1,2k) have 2k^2-k+1 vertices for k=2..6");
}

void chi_four() {
  struct Instance {
    const char* name;
    SignedGraph g;
  };
  std::vector<Instance> instances{
      {"M_1(C_3)", mycielski_cycle(1, 1)}, {"M_2(C_5)", mycielski_cycle(2, 2)}, {"BQ(2,3)", bq_odd(2, 1)},
      {"BQ(2,5)", bq_odd(2, 2)},           {"BQ(2,4)", bq_even(2, 2)},         {"BQ(3,4)", bq_even(3, 2)},
      {"BM(2,4)", bm(2, 2)},
  };
  for (const auto& inst : instances) {
    const auto t0 = Clock::now();
    const int n = inst.g.order();
    const auto r = try_chi_c(inst.g, ChiCOptions{n, Rational(4)});
    const double s = seconds_since(t0);
    bool ok = r && r->value == Rational(4) && r->certificate.pq == PQ{4, 1} &&
              verify_coloring(inst.g, r->certificate);
    std::size_t below = 0;
    if (r) {
      const auto grid = candidate_grid(n, Rational(4));
      below = grid.size() - 1;
      ok &= r->refuted.size() == below && std::equal(r->refuted.begin(), r->refuted.end(), grid.begin());
    }
    ok &= s < 300.0;
    report(3, ok,
           std::string("chi_c(") + inst.name + ", n=" + std::to_string(n) + ") = " +
               (r ? format_rational(r->value) : "none") + ", " + std::to_string(r ? r->refuted.size() : 0) +
               "/" + std::to_string(below) + " candidates below 4 refuted, " + std::to_string(s) +
               " s (limit 300 s)");
  }
}

void s_formula() {
  const auto t0 = Clock::now();
  const auto s2 = chi_c(s_construction(complete_graph(2))).value;
  const auto s3 = chi_c(s_construction(complete_graph(3))).value;
  const double s = seconds_since(t0);
  report(4, s2 == Rational(8, 3) && s3 == Rational(3) && s < 60.0,
         "chi_c(S(K_2)) = " + format_rational(s2) + " (want 8/3), chi_c(S(K_3)) = " + format_rational(s3) +
             " (want 3/1), " + std::to_string(s) + " s (limit 60 s)");
}

void oracle_equivalence(const std::vector<SignedGraph>& corpus) {
  std::mt19937_64 rng(777);
  int girth_bad = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    const auto g = test::random_signed_graph(n, density, rng);
    const auto fast = negative_girth(g);
    girth_bad += fast.length != brute_force_negative_girth(g).length;
    if (fast.witness) girth_bad += cycle_sign(g, fast.witness->vertices()) != Sign::Negative;
  }
  int chic_bad = 0;
  for (const auto& g : corpus) {
    const auto fast = try_chi_c(g, ChiCOptions{4, Rational(4)});
    const auto slow = brute_force_chi_c(g, 4, Rational(4));
    chic_bad += (fast ? std::optional<Rational>(fast->value) : std::nullopt) != slow;
  }
  report(5, girth_bad == 0 && chic_bad == 0,
         "oracle equivalence: girth " + std::to_string(girth_bad) + " mismatches / 200, chi_c " +
             std::to_string(chic_bad) + " mismatches / " + std::to_string(corpus.size()));
}

void lemma_suites() {
  const auto t0 = Clock::now();
  bool all = true;
  std::string detail;
  for (auto l : all_lemmas()) {
    const int trials = 500;
    const auto r = lemma_suite(l, default_lemma_params(l), trials, 0x5eed0000 + static_cast<int>(l));
    all &= r.failures == 0 && r.passes == trials;
    detail += " " + std::string(to_string(l)) + "=" + std::to_string(r.passes) + "/" + std::to_string(trials);
  }
  const double s = seconds_since(t0);
  report(6, all && s < 600.0, "lemma suites:" + detail + ", " + std::to_string(s) + " s (limit 600 s)");
}

void layer_parity() {
  const auto below_four = [] {
    std::vector<PQ> out;
    for (const auto& pq : candidate_grid(6, Rational(4))) {
      if (pq.value() < Rational(4)) out.push_back(pq);
    }
    return out;
  }();
  std::mt19937_64 rng(4242);
  int bad = 0, done = 0;
  for (const auto& g : {cylinder(3, 5), cylinder(3, 6)}) {
    for (int t = 0; t < 50; ++t) {
      std::optional<Coloring> c;
      while (!c) {
        const PQ pq = below_four[std::uniform_int_distribution<std::size_t>(0, below_four.size() - 1)(rng)];
        c = decide_colorable(g, pq, SearchOptions{rng()});
      }
      const auto par = layer_winding_parities(g, *c);
      bad += std::adjacent_find(par.begin(), par.end(), std::not_equal_to<>()) != par.end();
      ++done;
    }
  }
  report(7, bad == 0 && done == 100,
         "layer parities uniform on " + std::to_string(done - bad) + "/" + std::to_string(done) +
             " sampled colorings of cylinder(3,5) and cylinder(3,6)");
}

void monotonicity(const std::vector<SignedGraph>& corpus) {
  const auto grid = candidate_grid(4, Rational(4));
  int violations = 0;
  for (const auto& g : corpus) {
    bool seen = false;
    for (const auto& pq : grid) {
      const bool ok = decide_colorable(g, pq).has_value();
      violations += seen && !ok;
      seen |= ok;
    }
  }
  report(8, violations == 0,
         "ascending colorability: " + std::to_string(violations) + " violations over " +
             std::to_string(corpus.size()) + " graphs x " + std::to_string(grid.size()) + " candidates");
}

}  // namespace

int main() {
  const auto corpus = small_corpus();
  girth_sweep();
  order_claim();
  chi_four();
  s_formula();
  oracle_equivalence(corpus);
  lemma_suites();
  layer_parity();
  monotonicity(corpus);
  std::printf("%s: %d failing line(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
