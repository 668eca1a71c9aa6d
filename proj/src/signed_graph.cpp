#include "sgc/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "sgc/error.hpp"

namespace sgc {

std::string to_string(const VertexLabel& label) {
  struct Visitor {
    std::string operator()(const PlainLabel& l) const { return std::to_string(l.id); }
    std::string operator()(const GridLabel& l) const {
      return "v" + std::to_string(l.layer) + "," + std::to_string(l.index);
    }
    std::string operator()(const ApexLabel&) const { return "u"; }
    std::string operator()(const RungLabel& l) const { return "u" + std::to_string(l.index); }
  };
  return std::visit(Visitor{}, label);
}

namespace {

struct Violation {
  ErrorCode code;
  std::string message;
};

std::vector<Violation> check(const GraphData& data) {
  std::vector<Violation> out;
  if (data.n < 0) out.push_back({ErrorCode::BadParams, "negative vertex count"});
  if (!data.labels.empty() && static_cast<int>(data.labels.size()) != data.n) {
    out.push_back({ErrorCode::BadParams, "label count " + std::to_string(data.labels.size()) +
                                             " != vertex count " + std::to_string(data.n)});
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& e : data.edges) {
    std::ostringstream where;
    where << "edge (" << e.u << "," << e.v << ")";
    if (e.u < 0 || e.v < 0 || e.u >= data.n || e.v >= data.n) {
      out.push_back({ErrorCode::BadEndpoint, where.str() + " has an endpoint outside 0.." +
                                                 std::to_string(data.n - 1)});
      continue;
    }
    if (e.u == e.v) {
      out.push_back({ErrorCode::LoopEdge, where.str() + " is a loop"});
      continue;
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      out.push_back({ErrorCode::DuplicateEdge, where.str() + " duplicates an earlier edge"});
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> validate(const GraphData& data) {
  std::vector<std::string> report;
  for (auto& v : check(data)) report.push_back(std::move(v.message));
  return report;
}

SignedGraph::SignedGraph(GraphData data) {
  if (auto violations = check(data); !violations.empty()) {
    throw Error(violations.front().code, violations.front().message);
  }
  n_ = data.n;
  labels_ = std::move(data.labels);
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) labels_.emplace_back(PlainLabel{v});
  }
  edges_ = std::move(data.edges);
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.sign});
    adjacency_[e.v].push_back({e.u, e.sign});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::optional<Sign> SignedGraph::sign_between(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, int x) { return a.vertex < x; });
  if (it == list.end() || it->vertex != v) return std::nullopt;
  return it->sign;
}

bool SignedGraph::all_negative() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign == Sign::Negative; });
}

std::optional<int> SignedGraph::find(const VertexLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

SignedGraph build_graph(int n, std::vector<Edge> edges) {
  return SignedGraph(GraphData{n, {}, std::move(edges)});
}

SignedGraph switching(const SignedGraph& g, std::span<const int> cut) {
  std::vector<char> in_cut(static_cast<std::size_t>(g.order()), 0);
  for (int v : cut) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::BadVertex, "switch vertex " + std::to_string(v) + " out of range");
    }
    in_cut[v] = 1;
  }
  GraphData data = g.data();
  for (auto& e : data.edges) {
    if (in_cut[e.u] != in_cut[e.v]) e.sign = flipped(e.sign);
  }
  return SignedGraph(std::move(data));
}

std::vector<int> Bipartition::part(int which) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(side.size()); ++v) {
    if (side[v] == which) out.push_back(v);
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const SignedGraph& g) {
  Bipartition b;
  b.side.assign(static_cast<std::size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (b.side[root] != -1) continue;
    b.side[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop();
      for (const auto& nb : g.neighbors(x)) {
        if (b.side[nb.vertex] == -1) {
          b.side[nb.vertex] = 1 - b.side[x];
          frontier.push(nb.vertex);
        } else if (b.side[nb.vertex] == b.side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return b;
}

CycleSeq::CycleSeq(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::BadParams, "a cycle needs at least 3 vertices");
  }
  std::vector<int> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw Error(ErrorCode::BadParams, "negative vertex id in cycle");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::BadParams, "cycle vertices must be distinct");
  }
}

int CycleSeq::at_cyclic(int i) const {
  const int m = length();
  return vertices_[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::vector<CycleSeq> exact_square(const CycleSeq& c) {
  const int m = c.length();
  if (m % 2 == 1) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) seq.push_back(c[(2 * i) % m]);
    return {CycleSeq(std::move(seq))};
  }
  if (m < 6) {
    throw Error(ErrorCode::DegenerateSquare,
                "exact square of C_" + std::to_string(m) + " has 2-vertex components");
  }
  std::vector<int> first, second;
  for (int i = 0; i < m; ++i) (i % 2 == 0 ? first : second).push_back(c[i]);
  return {CycleSeq(std::move(first)), CycleSeq(std::move(second))};
}

std::optional<Sign> cycle_sign(const SignedGraph& g, std::span<const int> cycle) {
  Sign product = Sign::Positive;
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    auto s = g.sign_between(cycle[i], cycle[(i + 1) % m]);
    if (!s) return std::nullopt;
    product = product * *s;
  }
  return product;
}

}  // namespace sgc
