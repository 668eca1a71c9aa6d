#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc::test {

// Random simple signed graph: each pair present with probability `density`,
// each present edge negative with probability 1/2.
inline SignedGraph random_signed_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density), neg(0.5);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, neg(rng) ? Sign::Negative : Sign::Positive});
    }
  }
  return build_graph(n, std::move(edges));
}

inline SignedGraph random_negative_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, Sign::Negative});
    }
  }
  return build_graph(n, std::move(edges));
}

inline SignedGraph negative_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Sign::Negative});
  return build_graph(n, std::move(edges));
}

// Every simple cycle once, as a vertex list starting at its smallest vertex
// with the second vertex smaller than the last.
inline std::vector<std::vector<int>> all_cycles(const SignedGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<void(int, int)> dfs = [&](int root, int x) {
    for (const auto& nb : g.neighbors(x)) {
      const int y = nb.vertex;
      if (y == root && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (y <= root || used[y]) continue;
      used[y] = 1;
      path.push_back(y);
      dfs(root, y);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (int root = 0; root < g.order(); ++root) {
    path = {root};
    used[root] = 1;
    dfs(root, root);
    used[root] = 0;
  }
  return out;
}

inline std::vector<int> random_subset(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(0.5);
  std::vector<int> s;
  for (int v = 0; v < n; ++v) {
    if (pick(rng)) s.push_back(v);
  }
  return s;
}

}  // namespace sgc::test
