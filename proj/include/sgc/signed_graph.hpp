#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sgc {

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign flipped(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

// Structural vertex labels. Grid layers and indices are 1-based.
struct PlainLabel {
  int id = 0;
  friend bool operator==(const PlainLabel&, const PlainLabel&) = default;
};
struct GridLabel {
  int layer = 1;
  int index = 1;
  friend bool operator==(const GridLabel&, const GridLabel&) = default;
};
struct ApexLabel {
  friend bool operator==(const ApexLabel&, const ApexLabel&) = default;
};
struct RungLabel {
  int index = 1;
  friend bool operator==(const RungLabel&, const RungLabel&) = default;
};

using VertexLabel = std::variant<PlainLabel, GridLabel, ApexLabel, RungLabel>;

std::string to_string(const VertexLabel& label);

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Negative;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int vertex = 0;
  Sign sign = Sign::Negative;
};

// Unvalidated graph description, as read from a file or assembled by hand.
struct GraphData {
  int n = 0;
  std::vector<VertexLabel> labels;  // empty means Plain labels
  std::vector<Edge> edges;
};

// Returns every invariant violation of `data`; empty when the data describes
// a simple signed graph.
std::vector<std::string> validate(const GraphData& data);

// Immutable simple signed graph on vertices 0..n-1. Edges are normalized to
// u < v and kept sorted lexicographically.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws Error{LoopEdge, BadEndpoint, DuplicateEdge} on the first violation.
  explicit SignedGraph(GraphData data);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(int v) const { return labels_.at(v); }
  std::span<const Neighbor> neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  std::optional<Sign> sign_between(int u, int v) const;
  bool all_negative() const noexcept;

  // Vertex carrying `label`, if any.
  std::optional<int> find(const VertexLabel& label) const;

  GraphData data() const { return {n_, labels_, edges_}; }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Builds a graph with Plain labels.
SignedGraph build_graph(int n, std::vector<Edge> edges);

// Flips the sign of every edge with exactly one endpoint in `cut`.
SignedGraph switching(const SignedGraph& g, std::span<const int> cut);

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex; the lowest vertex of each component is on side 0
  std::vector<int> part(int which) const;
};

std::optional<Bipartition> is_bipartite(const SignedGraph& g);

// Ordered cycle of distinct vertex ids; its edges need not exist in any graph.
class CycleSeq {
 public:
  CycleSeq() = default;
  // Throws Error{BadParams} unless the ids are distinct, non-negative and m >= 3.
  explicit CycleSeq(std::vector<int> vertices);

  int length() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  int operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  // Cyclic access.
  int at_cyclic(int i) const;

  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;

 private:
  std::vector<int> vertices_;
};

// Exact square of a cycle. Odd length: one cycle v0 v2 v4 ... of the same length.
// Even length (>= 6): two cycles; [0] holds positions 0,2,4,... and [1] holds
// positions 1,3,5,.... With the customary 1-based naming v_1..v_n these are
// the odd-indexed and even-indexed halves respectively.
std::vector<CycleSeq> exact_square(const CycleSeq& c);

// Sign product along the closed walk through `cycle` in `g`; nullopt if some
// consecutive pair is not an edge.
std::optional<Sign> cycle_sign(const SignedGraph& g, std::span<const int> cycle);

}  // namespace sgc
