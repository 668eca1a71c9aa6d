#include "sgc/girth.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "sgc/error.hpp"
#include "sgc/parallel.hpp"

namespace sgc {

int DoubleCover::size() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adjacency) total += list.size();
  return static_cast<int>(total / 2);
}

DoubleCover double_cover(const SignedGraph& g) {
  DoubleCover dc;
  dc.base_order = g.order();
  dc.adjacency.assign(static_cast<std::size_t>(2 * g.order()), {});
  for (const auto& e : g.edges()) {
    const int flip = e.sign == Sign::Negative ? 1 : 0;
    for (int a = 0; a < 2; ++a) {
      const int x = DoubleCover::id(e.u, a);
      const int y = DoubleCover::id(e.v, a ^ flip);
      dc.adjacency[x].push_back(y);
      dc.adjacency[y].push_back(x);
    }
  }
  for (auto& list : dc.adjacency) std::sort(list.begin(), list.end());
  return dc;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> bfs(const DoubleCover& dc, int source) {
  std::vector<int> dist(static_cast<std::size_t>(dc.order()), kUnreached);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    for (int y : dc.adjacency[x]) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

Sign walk_sign(const SignedGraph& g, const std::vector<int>& walk) {
  auto s = cycle_sign(g, walk);
  if (!s) throw Error(ErrorCode::BadParams, "closed walk uses a non-edge");
  return *s;
}

// Rotates to the smallest vertex and picks the direction with the smaller
// second vertex.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<int> negative_subcycle(const SignedGraph& g, std::vector<int> walk) {
  while (true) {
    const std::size_t m = walk.size();
    std::size_t i = 0, j = 0;
    bool repeated = false;
    for (std::size_t a = 0; a < m && !repeated; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (walk[a] == walk[b]) {
          i = a;
          j = b;
          repeated = true;
          break;
        }
      }
    }
    if (!repeated) return walk;
    // Split at the repeated vertex; the two closed sub-walks multiply to the
    // sign of the whole, so exactly one of them is negative.
    std::vector<int> inner(walk.begin() + static_cast<std::ptrdiff_t>(i),
                           walk.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<int> outer(walk.begin() + static_cast<std::ptrdiff_t>(j), walk.end());
    outer.insert(outer.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i));
    walk = walk_sign(g, inner) == Sign::Negative ? std::move(inner) : std::move(outer);
  }
}

GirthResult negative_girth(const SignedGraph& g) {
  const DoubleCover dc = double_cover(g);
  const int n = g.order();
  std::vector<int> cycle_len(static_cast<std::size_t>(n), kUnreached);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t v) {
    const int vi = static_cast<int>(v);
    cycle_len[v] = bfs(dc, DoubleCover::id(vi, 0))[DoubleCover::id(vi, 1)];
  });
  auto best = std::min_element(cycle_len.begin(), cycle_len.end());
  if (best == cycle_len.end() || *best == kUnreached) return {};

  const int length = *best;
  const int root = static_cast<int>(best - cycle_len.begin());
  const int source = DoubleCover::id(root, 0);
  const int target = DoubleCover::id(root, 1);
  const auto from_source = bfs(dc, source);
  const auto to_target = bfs(dc, target);

  // Greedy walk along shortest source->target paths, smallest id first.
  std::vector<int> walk{root};
  int cur = source;
  for (int step = 1; step < length; ++step) {
    for (int y : dc.adjacency[cur]) {
      if (from_source[y] == step && to_target[y] == length - step) {
        cur = y;
        break;
      }
    }
    walk.push_back(cur / 2);
  }
  auto cycle = canonical_cycle(negative_subcycle(g, std::move(walk)));
  GirthResult result;
  result.length = static_cast<int>(cycle.size());
  result.witness = CycleSeq(std::move(cycle));
  return result;
}

GirthResult odd_girth(const SignedGraph& g) {
  if (!g.all_negative()) {
    throw Error(ErrorCode::HasPositiveEdge, "odd girth is defined here for all-negative graphs");
  }
  return negative_girth(g);
}

namespace {

struct CycleSearch {
  const SignedGraph& g;
  int root = 0;
  std::vector<int> path;
  std::vector<char> on_path;
  int best = kUnreached;
  std::vector<int> best_cycle;

  void extend(int x, Sign sign) {
    for (const auto& nb : g.neighbors(x)) {
      const Sign s = sign * nb.sign;
      if (nb.vertex == root) {
        if (path.size() >= 3 && s == Sign::Negative && static_cast<int>(path.size()) < best) {
          best = static_cast<int>(path.size());
          best_cycle = path;
        }
        continue;
      }
      // Only cycles shorter than the current best can improve it.
      if (nb.vertex < root || on_path[nb.vertex] || static_cast<int>(path.size()) + 1 >= best) continue;
      on_path[nb.vertex] = 1;
      path.push_back(nb.vertex);
      extend(nb.vertex, s);
      path.pop_back();
      on_path[nb.vertex] = 0;
    }
  }
};

}  // namespace

GirthResult brute_force_negative_girth(const SignedGraph& g) {
  if (g.order() > 14) throw Error(ErrorCode::TooLarge, "cycle enumeration limited to 14 vertices");
  CycleSearch search{g, 0, {}, std::vector<char>(static_cast<std::size_t>(g.order()), 0), kUnreached, {}};
  for (int root = 0; root < g.order(); ++root) {
    search.root = root;
    search.path = {root};
    search.on_path[root] = 1;
    search.extend(root, Sign::Positive);
    search.on_path[root] = 0;
  }
  if (search.best == kUnreached) return {};
  GirthResult result;
  result.length = search.best;
  result.witness = CycleSeq(canonical_cycle(search.best_cycle));
  return result;
}

}  // namespace sgc
