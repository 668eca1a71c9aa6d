#include "sgc/winding.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

#include "sgc/error.hpp"

namespace sgc {

CircleR make_circle(const Rational& r) {
  if (r <= 0) throw Error(ErrorCode::BadParams, "circle circumference must be positive");
  return CircleR{r};
}

CirclePoint::CirclePoint(CircleR circle, const Rational& pos)
    : circle_(make_circle(circle.r)), pos_(mod_positive(pos, circle.r)) {}

Rational circ_dist(const CirclePoint& x, const CirclePoint& y) {
  if (x.circle() != y.circle()) {
    throw Error(ErrorCode::CircleMismatch, "points lie on circles " + format_rational(x.circle().r) +
                                               " and " + format_rational(y.circle().r));
  }
  const Rational d = clockwise_length(x.pos(), y.pos(), x.circle().r);
  return std::min(d, x.circle().r - d);
}

CirclePoint antipode(const CirclePoint& x) {
  return CirclePoint(x.circle(), x.pos() + x.circle().r / 2);
}

Rational clockwise_length(const Rational& a, const Rational& b, const Rational& r) {
  return mod_positive(b - a, r);
}

const Rational& CycleMap::image(int i) const {
  const int m = length();
  return images[static_cast<std::size_t>(((i % m) + m) % m)];
}

CycleMap make_cycle_map(CycleSeq cycle, const Rational& r, std::vector<Rational> images) {
  const CircleR circle = make_circle(r);
  if (static_cast<int>(images.size()) != cycle.length()) {
    throw Error(ErrorCode::PartialAssignment, "cycle of length " + std::to_string(cycle.length()) +
                                                  " has " + std::to_string(images.size()) + " images");
  }
  for (auto& x : images) x = mod_positive(x, r);
  return CycleMap{std::move(cycle), circle, std::move(images)};
}

ArcWalk extend_cD(const CycleMap& m) {
  ArcWalk w{m.circle, {}};
  const Rational& r = m.circle.r;
  for (int i = 0; i < m.length(); ++i) {
    const Rational& a = m.image(i);
    const Rational& b = m.image(i + 1);
    if (a == b) {
      throw Error(ErrorCode::EqualAdjacentImages,
                  "positions " + std::to_string(i) + " and " + std::to_string((i + 1) % m.length()) +
                      " share image " + format_rational(a));
    }
    w.arcs.push_back({a, b, Direction::Clockwise, clockwise_length(a, b, r)});
  }
  return w;
}

ArcWalk extend_csh(const CycleMap& m) {
  ArcWalk w{m.circle, {}};
  const Rational& r = m.circle.r;
  for (int i = 0; i < m.length(); ++i) {
    const Rational& a = m.image(i);
    const Rational& b = m.image(i + 1);
    const Rational cw = clockwise_length(a, b, r);
    if (cw * 2 == r) {
      throw Error(ErrorCode::AmbiguousTie, "positions " + std::to_string(i) + " and " +
                                               std::to_string((i + 1) % m.length()) +
                                               " are antipodal");
    }
    if (cw * 2 < r) {
      w.arcs.push_back({a, b, Direction::Clockwise, cw});
    } else {
      w.arcs.push_back({a, b, Direction::Anticlockwise, r - cw});
    }
  }
  return w;
}

Rational Interval::length() const {
  return lo == hi ? circle.r : clockwise_length(lo, hi, circle.r);
}

Rational Interval::midpoint() const { return mod_positive(lo + length() / 2, circle.r); }

bool Interval::contains(const Rational& x) const {
  const Rational off = clockwise_length(lo, x, circle.r);
  return off > 0 && off < length();
}

namespace {

std::vector<Rational> distinct_sorted(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

std::vector<Interval> all_intervals(const CycleMap& m) {
  const auto pts = distinct_sorted(m.images);
  std::vector<Interval> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back({m.circle, pts[i], pts[(i + 1) % pts.size()]});
  }
  return out;
}

Interval pick_interval(const CycleMap& m) { return all_intervals(m).front(); }

int winding_number(const ArcWalk& w, const Interval& i) {
  if (w.circle != i.circle) throw Error(ErrorCode::CircleMismatch, "walk and interval on different circles");
  const Rational& r = w.circle.r;
  const Rational mid = i.midpoint();
  int total = 0;
  for (const auto& arc : w.arcs) {
    if (i.contains(arc.from) || i.contains(arc.to)) {
      throw Error(ErrorCode::IntervalTouchesVertexImage,
                  "arc endpoint " + format_rational(i.contains(arc.from) ? arc.from : arc.to) +
                      " lies inside the interval");
    }
    if (arc.length.numerator() == 0) continue;
    // An arc either covers the whole interval or misses it; test the midpoint.
    if (arc.direction == Direction::Clockwise) {
      const Rational off = clockwise_length(arc.from, mid, r);
      if (off > 0 && off < arc.length) ++total;
    } else {
      const Rational off = clockwise_length(mid, arc.from, r);
      if (off > 0 && off < arc.length) --total;
    }
  }
  return total;
}

bool is_far_polar_cycle(const CycleMap& m) {
  const Rational& r = m.circle.r;
  for (int i = 0; i < m.length(); ++i) {
    const Rational& a = m.image(i - 1);
    const Rational& x = m.image(i);
    const Rational& b = m.image(i + 1);
    if (a == b) {
      // Parts of length 0 and r: x must avoid the shared point.
      if (x == a) return false;
      continue;
    }
    const Rational ab = clockwise_length(a, b, r);
    if (ab * 2 == r) return false;
    const Rational ax = clockwise_length(a, x, r);
    if (ax.numerator() == 0 || ax == ab) return false;  // x on the boundary
    const Rational containing = ax < ab ? ab : r - ab;
    if (containing * 2 <= r) return false;
  }
  return true;
}

namespace {

// All points in a common open semicircle: some point p has every other point
// within clockwise offset < r/2.
bool in_open_semicircle(const std::vector<Rational>& pts, const Rational& r) {
  if (pts.empty()) return true;
  const auto uniq = distinct_sorted(pts);
  for (const auto& start : uniq) {
    bool all = true;
    for (const auto& x : uniq) {
      if (clockwise_length(start, x, r) * 2 >= r) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool is_far_polar_graph(const SignedGraph& g, const CircleR& circle, std::span<const Rational> images) {
  if (static_cast<int>(images.size()) != g.order()) {
    throw Error(ErrorCode::PartialAssignment, "need one image per vertex");
  }
  const Rational& r = circle.r;
  // Separating diameter for x  <=>  neighbors of x and the antipode of x fit
  // in one open semicircle.
  for (int x = 0; x < g.order(); ++x) {
    std::vector<Rational> pts;
    for (const auto& nb : g.neighbors(x)) pts.push_back(mod_positive(images[nb.vertex], r));
    pts.push_back(mod_positive(images[x] + r / 2, r));
    if (!in_open_semicircle(pts, r)) return false;
  }
  return true;
}

int GreenOrange::green_count() const {
  return static_cast<int>(std::count(green.begin(), green.end(), true));
}

GreenOrange green_orange(const CycleMap& m, const Interval& i) {
  const ArcWalk w = extend_cD(m);
  GreenOrange out;
  for (const auto& arc : w.arcs) {
    ArcWalk single{w.circle, {arc}};
    out.green.push_back(winding_number(single, i) != 0);
  }
  const int n = m.length();
  for (int v = 0; v < n; ++v) {
    if (out.green[static_cast<std::size_t>((v + n - 1) % n)] != out.green[static_cast<std::size_t>(v)]) {
      out.bichromatic.push_back(v);
    }
  }
  return out;
}

CycleMap restrict_map(const CycleMap& m, const CycleSeq& sub) {
  std::map<int, Rational> image_of;
  for (int i = 0; i < m.length(); ++i) image_of.emplace(m.cycle[i], m.images[static_cast<std::size_t>(i)]);
  std::vector<Rational> images;
  for (int v : sub.vertices()) {
    auto it = image_of.find(v);
    if (it == image_of.end()) throw Error(ErrorCode::PartialAssignment, "vertex " + std::to_string(v) + " has no image");
    images.push_back(it->second);
  }
  return CycleMap{sub, m.circle, std::move(images)};
}

std::vector<Rational> coloring_images(const Coloring& c) {
  std::vector<Rational> out;
  out.reserve(c.assign.size());
  for (int x : c.assign) out.emplace_back(x, c.pq.q);
  return out;
}

CycleMap coloring_to_cyclemap(const Coloring& c, const CycleSeq& cyc) {
  if (cyc.length() < 3) throw Error(ErrorCode::PartialAssignment, "empty cycle");
  std::vector<Rational> images;
  for (int v : cyc.vertices()) {
    if (v < 0 || v >= static_cast<int>(c.assign.size())) {
      throw Error(ErrorCode::PartialAssignment, "vertex " + std::to_string(v) + " is not colored");
    }
    images.emplace_back(c.assign[static_cast<std::size_t>(v)], c.pq.q);
  }
  return make_cycle_map(cyc, c.pq.value(), std::move(images));
}

std::vector<Rational> sample_far_polar(const SignedGraph& g, PQ pq, std::uint64_t seed) {
  if (!g.all_negative()) throw Error(ErrorCode::BadParams, "sampling needs an all-negative graph");
  if (pq.value() >= 4) throw Error(ErrorCode::BadParams, "sampling needs r < 4");
  auto c = decide_colorable(g, pq, SearchOptions{seed});
  if (!c) throw Error(ErrorCode::Uncolorable, "no circular " + format_rational(pq.value()) + "-coloring");
  auto images = coloring_images(*c);
  if (!is_far_polar_graph(g, CircleR{pq.value()}, images)) {
    throw Error(ErrorCode::BadParams, "sampled coloring is not far-polar");
  }
  return images;
}

namespace {

struct GridShape {
  int layers = 0;
  int width = 0;
  std::vector<std::vector<int>> id;  // id[layer-1][index-1]
};

GridShape grid_shape(const SignedGraph& g) {
  GridShape s;
  for (const auto& label : g.labels()) {
    if (const auto* grid = std::get_if<GridLabel>(&label)) {
      s.layers = std::max(s.layers, grid->layer);
      s.width = std::max(s.width, grid->index);
    }
  }
  if (s.layers < 1 || s.width < 3) throw Error(ErrorCode::NotCylinder, "graph carries no grid of width >= 3");
  s.id.assign(static_cast<std::size_t>(s.layers), std::vector<int>(static_cast<std::size_t>(s.width), -1));
  for (int v = 0; v < g.order(); ++v) {
    if (const auto* grid = std::get_if<GridLabel>(&g.label(v))) {
      if (grid->layer >= 1 && grid->index >= 1) s.id[grid->layer - 1][grid->index - 1] = v;
    }
  }
  for (const auto& row : s.id) {
    if (std::find(row.begin(), row.end(), -1) != row.end()) {
      throw Error(ErrorCode::NotCylinder, "grid labels do not cover every (layer, index)");
    }
  }
  return s;
}

}  // namespace

std::vector<int> layer_winding_parities(const SignedGraph& g, const Coloring& c) {
  const GridShape s = grid_shape(g);
  if (c.pq.value() >= 4) {
    throw Error(ErrorCode::RTooLarge, "layer parities need r < 4, got " + format_rational(c.pq.value()));
  }
  if (!verify_coloring(g, c)) throw Error(ErrorCode::BadParams, "not a valid circular coloring");

  auto parity = [](int w) { return ((w % 2) + 2) % 2; };
  std::vector<int> out;
  if (s.layers == 1) {
    CycleMap m = coloring_to_cyclemap(c, CycleSeq(s.id[0]));
    out.push_back(parity(winding_number(extend_csh(m), pick_interval(m))));
    return out;
  }
  for (int layer = 1; layer <= s.layers; ++layer) {
    // Zigzag v_{i,1} v_{i+1,1} v_{i,2} v_{i+1,2} ...; its exact square splits
    // into layer i (even positions) and layer i+1 (odd positions).
    const int lower = layer < s.layers ? layer : layer - 1;
    const int half = layer < s.layers ? 0 : 1;
    std::vector<int> zig;
    for (int j = 0; j < s.width; ++j) {
      zig.push_back(s.id[lower - 1][j]);
      zig.push_back(s.id[lower][j]);
    }
    CycleMap zmap = coloring_to_cyclemap(c, CycleSeq(zig));
    const Interval interval = pick_interval(zmap);
    const CycleMap layer_map = restrict_map(zmap, exact_square(zmap.cycle)[half]);
    out.push_back(parity(winding_number(extend_csh(layer_map), interval)));
  }
  return out;
}

std::string cycle_map_to_json(const CycleMap& m) {
  nlohmann::ordered_json j;
  j["r"] = format_rational(m.circle.r);
  j["cycle"] = m.cycle.vertices();
  std::vector<std::string> images;
  for (const auto& x : m.images) images.push_back(format_rational(x));
  j["images"] = images;
  return j.dump();
}

CycleMap cycle_map_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    const Rational r = parse_rational(j.at("r").get<std::string>());
    std::vector<Rational> images;
    for (const auto& x : j.at("images")) {
      images.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<std::int64_t>()));
    }
    return make_cycle_map(CycleSeq(j.at("cycle").get<std::vector<int>>()), r, std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad mapping JSON: ") + e.what());
  }
}

}  // namespace sgc
