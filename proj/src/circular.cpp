#include "sgc/circular.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <random>

#include "sgc/error.hpp"

namespace sgc {

PQ make_pq(int p, int q) {
  if (q < 1 || p % 2 != 0 || p < 2 * q) {
    throw Error(ErrorCode::BadParams, "invalid p/q = " + std::to_string(p) + "/" +
                                          std::to_string(q) +
                                          " (need even p, q >= 1, p >= 2q)");
  }
  return PQ{p, q};
}

PQ pq_for(const Rational& r) {
  if (r < 2) throw Error(ErrorCode::BadParams, "circle circumference below 2: " + format_rational(r));
  const auto a = r.numerator();
  const auto b = r.denominator();
  return a % 2 == 0 ? make_pq(static_cast<int>(a), static_cast<int>(b))
                    : make_pq(static_cast<int>(2 * a), static_cast<int>(2 * b));
}

int circular_distance(int a, int b, int p) {
  int d = std::abs(a - b) % p;
  return std::min(d, p - d);
}

namespace {

bool edge_ok(Sign s, int a, int b, const PQ& pq) {
  if (s == Sign::Negative) return circular_distance(a, b, pq.p) >= pq.q;
  return circular_distance(a, (b + pq.p / 2) % pq.p, pq.p) >= pq.q;
}

void check_total(const SignedGraph& g, const Coloring& c) {
  if (static_cast<int>(c.assign.size()) != g.order()) {
    throw Error(ErrorCode::PartialAssignment,
                "coloring has " + std::to_string(c.assign.size()) + " entries for " +
                    std::to_string(g.order()) + " vertices");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (c.assign[v] < 0 || c.assign[v] >= c.pq.p) {
      throw Error(ErrorCode::PartialAssignment,
                  "vertex " + std::to_string(v) + " colored outside Z_" + std::to_string(c.pq.p));
    }
  }
}

}  // namespace

bool verify_coloring(const SignedGraph& g, const Coloring& c) {
  check_total(g, c);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return edge_ok(e.sign, c.assign[e.u], c.assign[e.v], c.pq);
  });
}

Coloring rotated(const Coloring& c, int t) {
  Coloring out = c;
  const int p = c.pq.p;
  for (auto& x : out.assign) x = ((x + t) % p + p) % p;
  return out;
}

namespace {

using Word = std::uint64_t;
constexpr int kWordBits = 64;

// Fixed-width subsets of Z_p stored as consecutive words inside one flat
// buffer; `words` words per set.
struct SetLayout {
  int p = 0;
  int words = 0;

  explicit SetLayout(int p_) : p(p_), words((p_ + kWordBits - 1) / kWordBits) {}

  static bool test(const Word* s, int i) { return (s[i / kWordBits] >> (i % kWordBits)) & 1U; }
  static void set(Word* s, int i) { s[i / kWordBits] |= Word{1} << (i % kWordBits); }

  int count(const Word* s) const {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(s[w]);
    return c;
  }

  void clear(Word* s) const { std::fill(s, s + words, Word{0}); }

  void fill(Word* s) const {
    std::fill(s, s + words, ~Word{0});
    if (p % kWordBits != 0) s[words - 1] = (Word{1} << (p % kWordBits)) - 1;
  }

  // Sets the linear range [lo, hi] with 0 <= lo <= hi < p.
  void set_linear(Word* s, int lo, int hi) const {
    int wlo = lo / kWordBits, whi = hi / kWordBits;
    Word lo_mask = ~Word{0} << (lo % kWordBits);
    Word hi_mask = (hi % kWordBits == kWordBits - 1) ? ~Word{0}
                                                     : ((Word{1} << (hi % kWordBits + 1)) - 1);
    if (wlo == whi) {
      s[wlo] |= lo_mask & hi_mask;
      return;
    }
    s[wlo] |= lo_mask;
    for (int w = wlo + 1; w < whi; ++w) s[w] = ~Word{0};
    s[whi] |= hi_mask;
  }

  // Sets `len` cyclically consecutive points starting at `start`.
  void set_cyclic(Word* s, int start, int len) const {
    if (len >= p) {
      fill(s);
      return;
    }
    start %= p;
    int end = start + len - 1;
    if (end < p) {
      set_linear(s, start, end);
    } else {
      set_linear(s, start, p - 1);
      set_linear(s, 0, end - p);
    }
  }

  // First set bit at index >= from, or p.
  int next_set(const Word* s, int from) const {
    if (from >= p) return p;
    int w = from / kWordBits;
    Word cur = s[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) return std::min(p, w * kWordBits + std::countr_zero(cur));
      if (++w >= words) return p;
      cur = s[w];
    }
  }

  // First clear bit at index >= from, or p.
  int next_clear(const Word* s, int from) const {
    if (from >= p) return p;
    int w = from / kWordBits;
    Word cur = ~s[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) return std::min(p, w * kWordBits + std::countr_zero(cur));
      if (++w >= words) return p;
      cur = ~s[w];
    }
  }

  // out = s + [start, start+len-1], the Minkowski sum on Z_p.
  void dilate(const Word* s, int start, int len, Word* out) const {
    clear(out);
    int pos = next_set(s, 0);
    while (pos < p) {
      int run_end = next_clear(s, pos);  // exclusive
      int span = run_end - pos + len - 1;
      if (span >= p) {
        fill(out);
        return;
      }
      set_cyclic(out, pos + start, span);
      pos = next_set(s, run_end);
    }
  }
};

struct LocalEdge {
  int to;
  int start;  // allowed offsets of the neighbor relative to this vertex
};

class ComponentSolver {
 public:
  ComponentSolver(const SignedGraph& g, const std::vector<int>& vertices, PQ pq,
                  std::mt19937_64* rng, SearchStats* stats)
      : layout_(pq.p), pq_(pq), vertices_(vertices), rng_(rng), stats_(stats) {
    const int c = static_cast<int>(vertices.size());
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < c; ++i) local[vertices[i]] = i;
    adj_.resize(static_cast<std::size_t>(c));
    // Negative: offsets [q, p-q]; positive: the same window moved by p/2.
    len_ = pq.p - 2 * pq.q + 1;
    for (int i = 0; i < c; ++i) {
      for (const auto& nb : g.neighbors(vertices[i])) {
        int start = nb.sign == Sign::Negative ? pq.q : (pq.p / 2 + pq.q) % pq.p;
        adj_[i].push_back({local[nb.vertex], start});
      }
    }
    scratch_.resize(static_cast<std::size_t>(layout_.words));
  }

  std::optional<std::vector<int>> solve() {
    const int c = static_cast<int>(vertices_.size());
    const int w = layout_.words;
    std::vector<Word> dom(static_cast<std::size_t>(c * w));
    for (int i = 0; i < c; ++i) layout_.fill(&dom[i * w]);
    // Pin the highest-degree vertex to 0.
    int root = 0;
    for (int i = 1; i < c; ++i) {
      if (adj_[i].size() > adj_[root].size()) root = i;
    }
    assign(dom, root, 0);
    if (!propagate(dom, root)) return std::nullopt;
    if (!search(dom, /*depth=*/0)) return std::nullopt;
    std::vector<int> colors(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) colors[i] = layout_.next_set(&dom[i * w], 0);
    return colors;
  }

 private:
  void assign(std::vector<Word>& dom, int v, int value) {
    Word* d = &dom[v * layout_.words];
    layout_.clear(d);
    SetLayout::set(d, value);
  }

  bool propagate(std::vector<Word>& dom, int changed) {
    const int w = layout_.words;
    std::vector<int> queue{changed};
    std::vector<char> queued(vertices_.size(), 0);
    queued[changed] = 1;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      queued[x] = 0;
      const Word* dx = &dom[x * w];
      for (const auto& e : adj_[x]) {
        layout_.dilate(dx, e.start, len_, scratch_.data());
        Word* dy = &dom[e.to * w];
        bool changed_y = false;
        bool empty = true;
        for (int k = 0; k < w; ++k) {
          Word nw = dy[k] & scratch_[k];
          changed_y |= nw != dy[k];
          dy[k] = nw;
          empty &= nw == 0;
        }
        if (empty) return false;
        if (changed_y && !queued[e.to]) {
          queued[e.to] = 1;
          queue.push_back(e.to);
        }
      }
    }
    return true;
  }

  bool search(std::vector<Word>& dom, int depth) {
    if (stats_) ++stats_->nodes;
    const int c = static_cast<int>(vertices_.size());
    const int w = layout_.words;
    int var = -1, best = 0;
    for (int i = 0; i < c; ++i) {
      int cnt = layout_.count(&dom[i * w]);
      if (cnt <= 1) continue;
      if (var == -1 || cnt < best ||
          (cnt == best && adj_[i].size() > adj_[var].size())) {
        var = i;
        best = cnt;
      }
    }
    if (var == -1) return true;

    std::vector<int> values;
    const Word* dv = &dom[var * w];
    // Reflection x -> -x maps colorings to colorings and fixes the pinned
    // root, so the first branching vertex may be confined to [0, p/2].
    const int limit = depth == 0 ? pq_.p / 2 : pq_.p - 1;
    for (int x = layout_.next_set(dv, 0); x <= limit && x < pq_.p; x = layout_.next_set(dv, x + 1)) {
      values.push_back(x);
    }
    if (rng_) std::shuffle(values.begin(), values.end(), *rng_);

    std::vector<Word> child;
    for (int value : values) {
      child = dom;
      assign(child, var, value);
      if (propagate(child, var) && search(child, depth + 1)) {
        dom.swap(child);
        return true;
      }
    }
    return false;
  }

  SetLayout layout_;
  PQ pq_;
  int len_ = 0;
  const std::vector<int>& vertices_;
  std::vector<std::vector<LocalEdge>> adj_;
  std::vector<Word> scratch_;
  std::mt19937_64* rng_;
  SearchStats* stats_;
};

std::vector<std::vector<int>> components(const SignedGraph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const auto& nb : g.neighbors(comp[i])) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          comp.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::optional<Coloring> decide_colorable(const SignedGraph& g, PQ pq, const SearchOptions& options,
                                         SearchStats* stats) {
  pq = make_pq(pq.p, pq.q);
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
  Coloring result{pq, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    ComponentSolver solver(g, comp, pq, rng ? &*rng : nullptr, stats);
    auto colors = solver.solve();
    if (!colors) return std::nullopt;
    int shift = 0;
    bool reflect = false;
    if (rng) {
      shift = std::uniform_int_distribution<int>(0, pq.p - 1)(*rng);
      reflect = std::uniform_int_distribution<int>(0, 1)(*rng) == 1;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int x = (*colors)[i];
      if (reflect) x = (pq.p - x) % pq.p;
      result.assign[comp[i]] = (x + shift) % pq.p;
    }
  }
  if (rng) {
    // Isolated vertices are unconstrained.
    for (const auto& comp : components(g)) {
      if (comp.size() == 1) {
        result.assign[comp[0]] = std::uniform_int_distribution<int>(0, pq.p - 1)(*rng);
      }
    }
  }
  return result;
}

std::vector<PQ> candidate_grid(int q_max, const Rational& upper) {
  if (q_max < 1) throw Error(ErrorCode::BadParams, "q_max must be >= 1");
  if (upper < 2) throw Error(ErrorCode::BadParams, "upper must be >= 2");
  std::vector<Rational> values;
  for (int b = 1; b <= q_max; ++b) {
    const auto top = floor_of(upper * Rational(b));
    for (std::int64_t a = 2 * b; a <= top; ++a) {
      if (std::gcd(a, static_cast<std::int64_t>(b)) == 1) values.emplace_back(a, b);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<PQ> out;
  out.reserve(values.size());
  for (const auto& r : values) out.push_back(pq_for(r));
  return out;
}

namespace {

ChiCOptions resolve(const SignedGraph& g, const ChiCOptions& options) {
  ChiCOptions r = options;
  if (!r.q_max) r.q_max = std::max(1, g.order());
  if (!r.upper) r.upper = is_bipartite(g) ? Rational(4) : Rational(std::max(2, 2 * g.order()));
  return r;
}

}  // namespace

std::optional<ChiCResult> try_chi_c(const SignedGraph& g, const ChiCOptions& options) {
  const auto opts = resolve(g, options);
  ChiCResult result;
  result.q_max = *opts.q_max;
  result.upper = *opts.upper;
  if (g.size() == 0) {
    // Edgeless: the least admissible circumference.
    result.value = Rational(2);
    result.certificate = Coloring{PQ{2, 1}, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    return result;
  }
  SearchStats stats;
  for (const auto& pq : candidate_grid(*opts.q_max, *opts.upper)) {
    if (auto c = decide_colorable(g, pq, {}, &stats)) {
      result.value = pq.value();
      result.certificate = std::move(*c);
      result.nodes = stats.nodes;
      return result;
    }
    result.refuted.push_back(pq);
  }
  return std::nullopt;
}

ChiCResult chi_c(const SignedGraph& g, const ChiCOptions& options) {
  auto result = try_chi_c(g, options);
  if (!result) {
    const auto opts = resolve(g, options);
    throw Error(ErrorCode::NoCandidateColorable,
                "no candidate p/q <= " + format_rational(*opts.upper) + " with q <= " +
                    std::to_string(*opts.q_max) + " is colorable");
  }
  return std::move(*result);
}

Coloring bipartite_four_coloring(const SignedGraph& g) {
  auto parts = is_bipartite(g);
  if (!parts) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  return Coloring{PQ{4, 1}, parts->side};
}

std::optional<Coloring> brute_force_colorable(const SignedGraph& g, PQ pq) {
  const int n = g.order();
  if (n > 8) throw Error(ErrorCode::TooLarge, "brute force limited to 8 vertices");
  Coloring c{make_pq(pq.p, pq.q), std::vector<int>(static_cast<std::size_t>(n), 0)};
  if (n == 0) return c;
  // Enumerate assign[1..n-1] in lexicographic order with assign[0] = 0.
  auto consistent = [&](int v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.vertex < v && !edge_ok(nb.sign, c.assign[v], c.assign[nb.vertex], c.pq)) return false;
    }
    return true;
  };
  int v = 1;
  if (n == 1) return c;
  c.assign[1] = -1;
  while (v >= 1) {
    if (++c.assign[v] >= pq.p) {
      --v;
      continue;
    }
    if (!consistent(v)) continue;
    if (v == n - 1) return c;
    ++v;
    c.assign[v] = -1;
  }
  return std::nullopt;
}

std::optional<Rational> brute_force_chi_c(const SignedGraph& g, int q_max, const Rational& upper) {
  if (g.order() > 8) throw Error(ErrorCode::TooLarge, "brute force limited to 8 vertices");
  if (g.size() == 0) return Rational(2);
  for (const auto& pq : candidate_grid(q_max, upper)) {
    if (brute_force_colorable(g, pq)) return pq.value();
  }
  return std::nullopt;
}

}  // namespace sgc
