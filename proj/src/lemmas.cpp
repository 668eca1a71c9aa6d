#include "sgc/lemmas.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <optional>

#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/parallel.hpp"

namespace sgc {

namespace {

constexpr Lemma kAllLemmas[] = {Lemma::NonCrossing, Lemma::EvenCycleParity, Lemma::OddSquareOdd,
                                Lemma::StarZero,    Lemma::C4Two,           Lemma::GreenParity,
                                Lemma::Zigzag4k,    Lemma::MobiusOdd};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int parity(int w) { return ((w % 2) + 2) % 2; }

SignedGraph negative_cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Sign::Negative});
  return build_graph(n, std::move(edges));
}

SignedGraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, Sign::Negative});
  return build_graph(leaves + 1, std::move(edges));
}

CycleSeq identity_cycle(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return CycleSeq(std::move(v));
}

// Circumferences in [2, 4) with small denominators, for solver sampling.
const std::vector<PQ>& below_four() {
  static const std::vector<PQ> grid = [] {
    std::vector<PQ> out;
    for (const auto& pq : candidate_grid(6, Rational(4))) {
      if (pq.value() < 4) out.push_back(pq);
    }
    return out;
  }();
  return grid;
}

// Solver-sampled coloring of `g` at a random r in [2, 4).
Coloring sample_coloring(const SignedGraph& g, std::mt19937_64& rng) {
  const auto& grid = below_four();
  for (int attempt = 0; attempt < 64; ++attempt) {
    const PQ pq = grid[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(grid.size()) - 1))];
    if (auto c = decide_colorable(g, pq, SearchOptions{rng()})) return *c;
  }
  throw Error(ErrorCode::Uncolorable, "no coloring below 4 found while sampling");
}

// Single-vertex moves on a grid of `cells` points that keep `ok` true.
template <typename Predicate>
void random_walk(std::vector<int>& cells, int cell_count, int moves, std::mt19937_64& rng,
                 Predicate ok) {
  for (int step = 0; step < moves; ++step) {
    const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cells.size()) - 1));
    const int old = cells[v];
    cells[v] = uniform(rng, 0, cell_count - 1);
    if (!ok(cells)) cells[v] = old;
  }
}

std::vector<Rational> scale_cells(const std::vector<int>& cells, const Rational& unit) {
  std::vector<Rational> out;
  out.reserve(cells.size());
  for (int c : cells) out.push_back(unit * c);
  return out;
}

// Far-polar cycle maps drawn two ways: the displacement construction plus
// random walk, and solver colorings of (C_n, -) perturbed the same way.
CycleMap sample_cycle(int n, std::mt19937_64& rng) {
  if (uniform(rng, 0, 1) == 0) return random_far_polar_cycle(n, rng);
  CircleR circle;
  auto images = random_far_polar_graph(negative_cycle_graph(n), circle, rng);
  return make_cycle_map(identity_cycle(n), circle.r, std::move(images));
}

// Winding contribution of each arc (+1, -1 or 0).
std::vector<int> arc_crossings(const ArcWalk& w, const Interval& i) {
  std::vector<int> out;
  for (const auto& arc : w.arcs) out.push_back(winding_number(ArcWalk{w.circle, {arc}}, i));
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string tally;
  std::optional<CycleMap> mapping;
};

Outcome check_noncrossing(int n, std::mt19937_64& rng) {
  CycleMap m = sample_cycle(n, rng);
  const Interval interval = pick_interval(m);
  int noncrossing = 0;
  for (const auto& half : exact_square(m.cycle)) {
    for (int x : arc_crossings(extend_csh(restrict_map(m, half)), interval)) noncrossing += x == 0;
  }
  Outcome o;
  o.pass = noncrossing % 2 == 0;
  o.detail = "non-crossing exact-square edges: " + std::to_string(noncrossing);
  o.tally = "noncrossing=" + std::to_string(noncrossing);
  o.mapping = std::move(m);
  return o;
}

Outcome check_even_cycle_parity(int n, std::mt19937_64& rng) {
  const Coloring c = sample_coloring(negative_cycle_graph(n), rng);
  CycleMap m = coloring_to_cyclemap(c, identity_cycle(n));
  const Interval interval = pick_interval(m);
  const auto halves = exact_square(m.cycle);
  const int w0 = winding_number(extend_csh(restrict_map(m, halves[0])), interval);
  const int w1 = winding_number(extend_csh(restrict_map(m, halves[1])), interval);
  Outcome o;
  o.pass = parity(w0) == parity(w1);
  o.detail = "half windings " + std::to_string(w0) + " and " + std::to_string(w1);
  o.tally = "parity=" + std::to_string(parity(w0)) + std::to_string(parity(w1));
  o.mapping = std::move(m);
  return o;
}

Outcome check_odd_square_odd(int n, std::mt19937_64& rng) {
  CycleMap m = sample_cycle(n, rng);
  const Interval interval = pick_interval(m);
  const int w = winding_number(extend_csh(restrict_map(m, exact_square(m.cycle)[0])), interval);
  Outcome o;
  o.pass = parity(w) == 1;
  o.detail = "exact-square winding " + std::to_string(w);
  o.tally = "w=" + std::to_string(w);
  o.mapping = std::move(m);
  return o;
}

Outcome check_star_zero(int leaves, std::mt19937_64& rng) {
  const Coloring c = sample_coloring(star_graph(leaves), rng);
  std::vector<int> order(static_cast<std::size_t>(leaves));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  CycleMap m = coloring_to_cyclemap(c, CycleSeq(order));
  const int w = winding_number(extend_csh(m), pick_interval(m));
  Outcome o;
  o.pass = w == 0;
  o.detail = "leaf-cycle winding " + std::to_string(w) + " (center at " +
             format_rational(Rational(c.assign[0], c.pq.q)) + ")";
  o.tally = "w=" + std::to_string(w);
  o.mapping = std::move(m);
  return o;
}

Outcome check_c4_two(std::mt19937_64& rng) {
  CycleMap m = sample_cycle(4, rng);
  const int w = winding_number(extend_cD(m), pick_interval(m));
  Outcome o;
  o.pass = std::abs(w) == 2;
  o.detail = "c^D winding " + std::to_string(w);
  o.tally = std::string("w=") + (w > 0 ? "+" : "") + std::to_string(w);
  o.mapping = std::move(m);
  return o;
}

struct BichromaticSplit {
  int even_positions = 0;  // 1-based odd indices v_1, v_3, ...
  int odd_positions = 0;   // 1-based even indices v_2, v_4, ...
};

BichromaticSplit split(const GreenOrange& go) {
  BichromaticSplit s;
  for (int v : go.bichromatic) (v % 2 == 0 ? s.even_positions : s.odd_positions)++;
  return s;
}

Outcome check_green_parity(int k, std::mt19937_64& rng) {
  CycleMap m = sample_cycle(2 * k, rng);
  const auto go = green_orange(m, pick_interval(m));
  const auto s = split(go);
  const int g = go.green_count();
  Outcome o;
  o.pass = parity(g) == parity(s.even_positions) && parity(g) == parity(s.odd_positions);
  o.detail = "green " + std::to_string(g) + ", bichromatic odd-indexed " + std::to_string(s.even_positions) +
             ", even-indexed " + std::to_string(s.odd_positions);
  o.tally = "green_parity=" + std::to_string(parity(g));
  o.mapping = std::move(m);
  return o;
}

Outcome check_zigzag(int k, std::mt19937_64& rng) {
  CycleMap m = sample_cycle(4 * k, rng);
  const Interval interval = pick_interval(m);
  const int g = green_orange(m, interval).green_count();
  const auto halves = exact_square(m.cycle);
  const int w_odd_indexed = winding_number(extend_csh(restrict_map(m, halves[0])), interval);
  const int w_even_indexed = winding_number(extend_csh(restrict_map(m, halves[1])), interval);
  Outcome o;
  o.pass = parity(g) == parity(w_even_indexed) && parity(g) == parity(w_odd_indexed);
  o.detail = "green " + std::to_string(g) + ", w(#2e) " + std::to_string(w_even_indexed) + ", w(#2o) " +
             std::to_string(w_odd_indexed);
  o.tally = "green_parity=" + std::to_string(parity(g));
  o.mapping = std::move(m);
  return o;
}

Outcome check_mobius(int k, std::mt19937_64& rng) {
  const SignedGraph ladder = mobius_ladder(k);
  CircleR circle;
  auto images = random_far_polar_graph(ladder, circle, rng);
  Outcome o;
  CycleMap m = make_cycle_map(identity_cycle(4 * k), circle.r, images);
  if (!is_far_polar_graph(ladder, circle, images)) {
    o.pass = false;
    o.detail = "sampler produced a map that is not far-polar";
    o.mapping = std::move(m);
    return o;
  }
  const Interval interval = pick_interval(m);
  const auto halves = exact_square(m.cycle);
  const int w_odd_indexed = winding_number(extend_csh(restrict_map(m, halves[0])), interval);
  const int w_even_indexed = winding_number(extend_csh(restrict_map(m, halves[1])), interval);
  o.pass = parity(w_even_indexed) == 1 && parity(w_odd_indexed) == 1;
  o.detail = "w(#2e) " + std::to_string(w_even_indexed) + ", w(#2o) " + std::to_string(w_odd_indexed);
  o.tally = "w(#2e)=" + std::to_string(w_even_indexed);
  o.mapping = std::move(m);
  return o;
}

void check_lemma_params(Lemma lemma, const std::vector<int>& params, int trials) {
  if (trials < 1) throw Error(ErrorCode::BadLemmaParams, "trials must be >= 1");
  if (params.empty()) throw Error(ErrorCode::BadLemmaParams, "at least one parameter required");
  for (int x : params) {
    bool ok = x <= 64;
    switch (lemma) {
      case Lemma::NonCrossing: ok &= x >= 3 && (x % 2 == 1 || x >= 6); break;
      case Lemma::EvenCycleParity: ok &= x >= 6 && x % 2 == 0; break;
      case Lemma::OddSquareOdd: ok &= x >= 3 && x % 2 == 1; break;
      case Lemma::StarZero: ok &= x >= 3; break;
      case Lemma::C4Two: break;
      case Lemma::GreenParity:
      case Lemma::Zigzag4k:
      case Lemma::MobiusOdd: ok &= x >= 2 && x <= 16; break;
    }
    if (!ok) {
      throw Error(ErrorCode::BadLemmaParams,
                  "parameter " + std::to_string(x) + " not valid for " + std::string(to_string(lemma)));
    }
  }
}

Outcome run_trial(Lemma lemma, int param, std::mt19937_64& rng) {
  switch (lemma) {
    case Lemma::NonCrossing: return check_noncrossing(param, rng);
    case Lemma::EvenCycleParity: return check_even_cycle_parity(param, rng);
    case Lemma::OddSquareOdd: return check_odd_square_odd(param, rng);
    case Lemma::StarZero: return check_star_zero(param, rng);
    case Lemma::C4Two: return check_c4_two(rng);
    case Lemma::GreenParity: return check_green_parity(param, rng);
    case Lemma::Zigzag4k: return check_zigzag(param, rng);
    case Lemma::MobiusOdd: return check_mobius(param, rng);
  }
  throw Error(ErrorCode::BadLemmaParams, "unknown lemma");
}

}  // namespace

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::NonCrossing: return "noncrossing";
    case Lemma::EvenCycleParity: return "even-cycle-parity";
    case Lemma::OddSquareOdd: return "odd-square-odd";
    case Lemma::StarZero: return "star-zero";
    case Lemma::C4Two: return "c4-two";
    case Lemma::GreenParity: return "green-parity";
    case Lemma::Zigzag4k: return "zigzag-4k";
    case Lemma::MobiusOdd: return "mobius-odd";
  }
  return "?";
}

Lemma parse_lemma(std::string_view name) {
  for (Lemma l : kAllLemmas) {
    if (to_string(l) == name) return l;
  }
  throw Error(ErrorCode::BadLemmaParams, "unknown lemma '" + std::string(name) + "'");
}

std::vector<Lemma> all_lemmas() { return {std::begin(kAllLemmas), std::end(kAllLemmas)}; }

std::vector<int> default_lemma_params(Lemma lemma) {
  switch (lemma) {
    case Lemma::NonCrossing: return {5, 6, 7, 8, 9, 10, 11, 12};
    case Lemma::EvenCycleParity: return {6, 8, 10, 12};
    case Lemma::OddSquareOdd: return {5, 7, 9};
    case Lemma::StarZero: return {4, 5, 6, 7, 8};
    case Lemma::C4Two: return {4};
    case Lemma::GreenParity:
    case Lemma::Zigzag4k: return {2, 3, 4};
    case Lemma::MobiusOdd: return {2, 3};
  }
  return {};
}

CycleMap random_far_polar_cycle(int n, std::mt19937_64& rng) {
  if (n < 3) throw Error(ErrorCode::BadLemmaParams, "cycle length must be >= 3");
  const int cells = uniform(rng, 8, 48);
  const Rational r(uniform(rng, 1, 16), uniform(rng, 1, 5));
  const Rational unit = r / cells;
  // Steps strictly between a quarter and three quarters of the circle keep
  // every vertex more than r/4 from both neighbours, hence far-polar.
  auto step_ok = [&](int d) { return 4 * d > cells && 4 * d < 3 * cells; };
  std::vector<int> pos(static_cast<std::size_t>(n));
  while (true) {
    pos[0] = uniform(rng, 0, cells - 1);
    for (int i = 1; i < n; ++i) {
      int d = 0;
      do {
        d = uniform(rng, 1, cells - 1);
      } while (!step_ok(d));
      pos[i] = (pos[i - 1] + d) % cells;
    }
    const int closing = (pos[0] - pos[n - 1] + cells) % cells;
    if (step_ok(closing)) break;
  }
  const CycleSeq cycle = identity_cycle(n);
  auto far_polar = [&](const std::vector<int>& cs) {
    return is_far_polar_cycle(CycleMap{cycle, CircleR{r}, scale_cells(cs, unit)});
  };
  random_walk(pos, cells, uniform(rng, 0, 6 * n), rng, far_polar);
  return make_cycle_map(cycle, r, scale_cells(pos, unit));
}

std::vector<Rational> random_far_polar_graph(const SignedGraph& g, CircleR& circle, std::mt19937_64& rng) {
  const Coloring c = sample_coloring(g, rng);
  const int refine = uniform(rng, 1, 3);
  const int cells = c.pq.p * refine;
  std::vector<int> pos;
  for (int x : c.assign) pos.push_back(x * refine);
  circle = CircleR{c.pq.value()};
  const Rational unit = circle.r / cells;
  auto far_polar = [&](const std::vector<int>& cs) {
    return is_far_polar_graph(g, circle, scale_cells(cs, unit));
  };
  random_walk(pos, cells, uniform(rng, 0, 4 * g.order()), rng, far_polar);
  return scale_cells(pos, unit);
}

LemmaReport lemma_suite(Lemma lemma, const std::vector<int>& params, int trials, std::uint64_t seed) {
  check_lemma_params(lemma, params, trials);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(trials));
  parallel_for(outcomes.size(), [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    const int param = params[t % params.size()];
    try {
      outcomes[t] = run_trial(lemma, param, rng);
    } catch (const Error& e) {
      outcomes[t].pass = false;
      outcomes[t].detail = e.what();
    }
  });

  LemmaReport report;
  report.lemma = lemma;
  report.params = params;
  report.seed = seed;
  report.trials = trials;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    auto& o = outcomes[t];
    if (!o.tally.empty()) ++report.tallies[o.tally];
    if (o.pass) {
      ++report.passes;
      continue;
    }
    ++report.failures;
    if (report.counterexamples.size() < LemmaReport::kMaxCounterexamples) {
      report.counterexamples.push_back(
          {params[t % params.size()], static_cast<std::uint64_t>(t), o.detail, std::move(o.mapping)});
    }
  }
  return report;
}

std::string lemma_report_to_json(const LemmaReport& report) {
  nlohmann::ordered_json j;
  j["lemma"] = std::string(to_string(report.lemma));
  j["params"] = report.params;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["passes"] = report.passes;
  j["failures"] = report.failures;
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (const auto& [key, count] : report.tallies) tallies[key] = count;
  j["tallies"] = tallies;
  nlohmann::ordered_json cex = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    cex.push_back({{"param", c.param},
                   {"trial", c.trial},
                   {"detail", c.detail},
                   {"mapping", c.mapping ? nlohmann::ordered_json::parse(cycle_map_to_json(*c.mapping))
                                         : nlohmann::ordered_json(nullptr)}});
  }
  j["counterexamples"] = cex;
  return j.dump();
}

}  // namespace sgc
