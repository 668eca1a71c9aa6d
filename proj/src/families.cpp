#include "sgc/families.hpp"

#include <utility>

#include "sgc/error.hpp"

namespace sgc {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Cylinder: return "cylinder";
    case Family::Mycielski: return "mycielski";
    case Family::BQOdd: return "bq-odd";
    case Family::BQEven: return "bq-even";
    case Family::BM: return "bm";
    case Family::MobiusLadder: return "mobius";
    case Family::SConstruction: return "s-of";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Cylinder, Family::Mycielski, Family::BQOdd, Family::BQEven, Family::BM,
                   Family::MobiusLadder, Family::SConstruction}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::BadParams, "unknown family '" + std::string(name) + "'");
}

void check_params(const FamilyParams& p) {
  auto fail = [&](const char* rule) {
    throw Error(ErrorCode::BadParams, std::string(to_string(p.family)) + " requires " + rule +
                                          " (got ell=" + std::to_string(p.ell) +
                                          ", k=" + std::to_string(p.k) + ")");
  };
  switch (p.family) {
    case Family::Cylinder:
      if (p.ell < 1 || p.k < 3) fail("ell >= 1, k >= 3");
      break;
    case Family::Mycielski:
      if (p.ell < 1 || p.k < 1) fail("ell >= 1, k >= 1");
      break;
    case Family::BQOdd:
      if (p.ell < 2 || p.k < 1) fail("ell >= 2, k >= 1");
      break;
    case Family::BQEven:
      if (p.ell < 2 || p.k < 2) fail("ell >= 2, k >= 2");
      break;
    case Family::BM:
      // ell = 1 is admitted so that BM(k-1, 2k) exists for k = 2.
      if (p.ell < 1 || p.k < 2) fail("ell >= 1, k >= 2");
      break;
    case Family::MobiusLadder:
      if (p.k < 1) fail("k >= 1");
      break;
    case Family::SConstruction:
      if (p.k < 2) fail("k >= 2");
      break;
  }
}

namespace {

// Grid part shared by every layered family: ell layers of `width` vertices,
// each v_{i,j} joined to v_{i+1,j-1} and v_{i+1,j} by negative edges.
struct GridBuilder {
  int ell;
  int width;
  std::vector<VertexLabel> labels;
  std::vector<Edge> edges;

  GridBuilder(int ell_, int width_) : ell(ell_), width(width_) {
    for (int i = 1; i <= ell; ++i) {
      for (int j = 1; j <= width; ++j) labels.emplace_back(GridLabel{i, j});
    }
    for (int i = 1; i < ell; ++i) {
      for (int j = 1; j <= width; ++j) {
        edges.push_back({id(i, j), id(i + 1, wrap(j - 1, width)), Sign::Negative});
        edges.push_back({id(i, j), id(i + 1, j), Sign::Negative});
      }
    }
  }

  int id(int layer, int index) const { return grid_id(layer, wrap(index, width), width); }

  int add_vertex(VertexLabel label) {
    labels.push_back(std::move(label));
    return static_cast<int>(labels.size()) - 1;
  }

  void add_apex_on_last_layer() {
    const int u = add_vertex(ApexLabel{});
    for (int j = 1; j <= width; ++j) edges.push_back({u, id(ell, j), Sign::Negative});
  }

  SignedGraph finish() && {
    const int n = static_cast<int>(labels.size());
    return SignedGraph(GraphData{n, std::move(labels), std::move(edges)});
  }
};

}  // namespace

SignedGraph cylinder(int ell, int k) {
  check_params({Family::Cylinder, ell, k});
  return GridBuilder(ell, k).finish();
}

SignedGraph mycielski_cycle(int ell, int k) {
  check_params({Family::Mycielski, ell, k});
  const int width = 2 * k + 1;
  GridBuilder b(ell, width);
  for (int j = 1; j <= width; ++j) b.edges.push_back({b.id(1, j), b.id(1, j + k), Sign::Negative});
  b.add_apex_on_last_layer();
  return std::move(b).finish();
}

SignedGraph bq_odd(int ell, int k) {
  check_params({Family::BQOdd, ell, k});
  const int width = 2 * k + 1;
  GridBuilder b(ell, width);
  for (int j = 1; j <= width; ++j) b.edges.push_back({b.id(1, j), b.id(2, j + k), Sign::Positive});
  b.add_apex_on_last_layer();
  return std::move(b).finish();
}

SignedGraph bq_even(int ell, int k) {
  check_params({Family::BQEven, ell, k});
  const int width = 2 * k;
  GridBuilder b(ell, width);
  // j and j+k name the same antipodal pair, so j = 1..k covers every chord once.
  for (int layer : {1, 2}) {
    for (int j = 1; j <= k; ++j) b.edges.push_back({b.id(layer, j), b.id(layer, j + k), Sign::Negative});
  }
  b.add_apex_on_last_layer();
  return std::move(b).finish();
}

SignedGraph bm(int ell, int k) {
  check_params({Family::BM, ell, k});
  const int width = 2 * k;
  GridBuilder b(ell, width);
  b.add_apex_on_last_layer();
  for (int i = 1; i <= k; ++i) {
    const int rung = b.add_vertex(RungLabel{i});
    b.edges.push_back({rung, b.id(1, i), Sign::Negative});
    b.edges.push_back({rung, b.id(1, i + 1), Sign::Negative});
    b.edges.push_back({rung, b.id(1, i + k), Sign::Positive});
    b.edges.push_back({rung, b.id(1, i + k + 1), Sign::Positive});
  }
  return std::move(b).finish();
}

SignedGraph mobius_ladder(int k) {
  check_params({Family::MobiusLadder, 1, k});
  const int n = 4 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Sign::Negative});
  for (int i = 0; i < 2 * k; ++i) edges.push_back({i, i + 2 * k, Sign::Negative});
  // k = 1: the rungs duplicate no cycle edge (C_4 plus both diagonals is K_4).
  return build_graph(n, std::move(edges));
}

SignedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Negative});
  }
  return build_graph(n, std::move(edges));
}

SignedGraph s_construction(const SignedGraph& g) {
  const int n = g.order();
  GraphData data;
  data.n = n + 2 * g.size();
  data.labels = g.labels();
  for (int i = 0; i < 2 * g.size(); ++i) data.labels.emplace_back(PlainLabel{n + i});
  int next = n;
  for (const auto& e : g.edges()) {
    const int x = next++;
    const int y = next++;
    data.edges.push_back({e.u, x, Sign::Positive});
    data.edges.push_back({x, e.v, Sign::Negative});
    data.edges.push_back({e.v, y, Sign::Negative});
    data.edges.push_back({y, e.u, Sign::Negative});
  }
  return SignedGraph(std::move(data));
}

SignedGraph make_family(const FamilyParams& p) {
  switch (p.family) {
    case Family::Cylinder: return cylinder(p.ell, p.k);
    case Family::Mycielski: return mycielski_cycle(p.ell, p.k);
    case Family::BQOdd: return bq_odd(p.ell, p.k);
    case Family::BQEven: return bq_even(p.ell, p.k);
    case Family::BM: return bm(p.ell, p.k);
    case Family::MobiusLadder: return mobius_ladder(p.k);
    case Family::SConstruction:
      check_params(p);
      return s_construction(complete_graph(p.k));
  }
  throw Error(ErrorCode::BadParams, "unknown family");
}

namespace {

int grid_width(const FamilyParams& p) {
  switch (p.family) {
    case Family::Cylinder: return p.k;
    case Family::Mycielski:
    case Family::BQOdd: return 2 * p.k + 1;
    case Family::BQEven:
    case Family::BM: return 2 * p.k;
    default: return 0;
  }
}

}  // namespace

int family_order(const FamilyParams& p) {
  switch (p.family) {
    case Family::Cylinder: return p.ell * p.k;
    case Family::Mycielski:
    case Family::BQOdd: return p.ell * (2 * p.k + 1) + 1;
    case Family::BQEven: return 2 * p.k * p.ell + 1;
    case Family::BM: return 2 * p.k * p.ell + p.k + 1;
    case Family::MobiusLadder: return 4 * p.k;
    case Family::SConstruction: return p.k + p.k * (p.k - 1);
  }
  return 0;
}

std::vector<std::string> validate_family(const SignedGraph& g, const FamilyParams& p) {
  std::vector<std::string> report = validate(g.data());
  const int width = grid_width(p);
  int apexes = 0;
  for (int v = 0; v < g.order(); ++v) {
    const auto& label = g.label(v);
    if (const auto* grid = std::get_if<GridLabel>(&label)) {
      if (width == 0 || grid->layer < 1 || grid->layer > p.ell || grid->index < 1 ||
          grid->index > width) {
        report.push_back("vertex " + std::to_string(v) + " label " + to_string(label) +
                         " outside layer 1.." + std::to_string(p.ell) + ", index 1.." +
                         std::to_string(width));
      }
    } else if (const auto* rung = std::get_if<RungLabel>(&label)) {
      if (p.family != Family::BM || rung->index < 1 || rung->index > p.k) {
        report.push_back("vertex " + std::to_string(v) + " rung label " + to_string(label) +
                         " outside 1.." + std::to_string(p.k));
      }
    } else if (std::holds_alternative<ApexLabel>(label)) {
      ++apexes;
    }
  }
  if (apexes > 1) report.push_back("more than one apex vertex");
  if (g.order() != family_order(p)) {
    report.push_back("vertex count " + std::to_string(g.order()) + " != expected " +
                     std::to_string(family_order(p)));
  }
  return report;
}

}  // namespace sgc
