#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgc/circular.hpp"
#include "sgc/rational.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

// Circle O_r of circumference r > 0. Positions grow clockwise.
struct CircleR {
  Rational r{1};
  friend bool operator==(const CircleR&, const CircleR&) = default;
};

CircleR make_circle(const Rational& r);  // throws Error{BadParams} unless r > 0

class CirclePoint {
 public:
  // The position is reduced into [0, r).
  CirclePoint(CircleR circle, const Rational& pos);

  const CircleR& circle() const noexcept { return circle_; }
  const Rational& pos() const noexcept { return pos_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  CircleR circle_;
  Rational pos_;
};

// min(|x-y|, r-|x-y|). Throws Error{CircleMismatch}.
Rational circ_dist(const CirclePoint& x, const CirclePoint& y);
CirclePoint antipode(const CirclePoint& x);

// Length of the clockwise arc from a to b on a circle of circumference r, in [0, r).
Rational clockwise_length(const Rational& a, const Rational& b, const Rational& r);

// Positions of the vertices of a cycle on O_r, one per cycle vertex in order.
struct CycleMap {
  CycleSeq cycle;
  CircleR circle;
  std::vector<Rational> images;  // each in [0, r)

  int length() const noexcept { return cycle.length(); }
  const Rational& image(int i) const;  // cyclic index
};

// Validates sizes and reduces images into [0, r).
CycleMap make_cycle_map(CycleSeq cycle, const Rational& r, std::vector<Rational> images);

enum class Direction { Clockwise, Anticlockwise };

struct Arc {
  Rational from;
  Rational to;
  Direction direction = Direction::Clockwise;
  Rational length;  // in [0, r)
};

struct ArcWalk {
  CircleR circle;
  std::vector<Arc> arcs;
};

// Each edge runs clockwise from its first endpoint's image to the second's.
// Throws Error{EqualAdjacentImages}.
ArcWalk extend_cD(const CycleMap& m);

// Each edge runs along the strictly shorter arc; equal images give a
// zero-length arc. Throws Error{AmbiguousTie} on antipodal neighbors.
ArcWalk extend_csh(const CycleMap& m);

// Open arc from `lo` clockwise to `hi` free of image points. lo == hi denotes
// the whole circle minus that point.
struct Interval {
  CircleR circle;
  Rational lo;
  Rational hi;

  Rational length() const;
  Rational midpoint() const;
  bool contains(const Rational& x) const;  // strict
};

// Interval between the smallest image and the next distinct image clockwise.
Interval pick_interval(const CycleMap& m);
std::vector<Interval> all_intervals(const CycleMap& m);

// Clockwise traversals of `i` minus anticlockwise traversals.
// Throws Error{IntervalTouchesVertexImage} if an arc endpoint lies inside `i`.
int winding_number(const ArcWalk& w, const Interval& i);

// True iff, for every i, images[i-1] and images[i+1] split the circle into
// unequal parts and images[i] lies strictly inside the larger one.
bool is_far_polar_cycle(const CycleMap& m);

// True iff every vertex x has an open semicircle holding all neighbor images
// while images[x] lies in the opposite open semicircle.
bool is_far_polar_graph(const SignedGraph& g, const CircleR& circle, std::span<const Rational> images);

struct GreenOrange {
  std::vector<bool> green;       // edge i joins positions i and i+1
  std::vector<int> bichromatic;  // positions whose two edges differ in color
  int green_count() const;
};

// Edge green iff its c^D arc contains `i`.
GreenOrange green_orange(const CycleMap& m, const Interval& i);

// Restricts a map to a sub-cycle of its vertices (e.g. an exact-square half).
CycleMap restrict_map(const CycleMap& m, const CycleSeq& sub);

// images[i] = assign(v_i) / q on O_{p/q}. Throws Error{PartialAssignment}.
CycleMap coloring_to_cyclemap(const Coloring& c, const CycleSeq& cyc);
std::vector<Rational> coloring_images(const Coloring& c);

// Solver-sampled coloring of an all-negative graph at r = p/q < 4, returned as
// images on O_{p/q}; the result is checked to be far-polar. Throws
// Error{Uncolorable} or Error{BadParams}.
std::vector<Rational> sample_far_polar(const SignedGraph& g, PQ pq, std::uint64_t seed);

// Winding parity (0 or 1) of every layer cycle v_{i,1}..v_{i,k} of a grid
// labeled graph under c^sh, each taken as a half of the exact square of the
// zigzag cycle between neighbouring layers. Throws Error{NotCylinder},
// Error{RTooLarge}, Error{BadParams} for an invalid coloring.
std::vector<int> layer_winding_parities(const SignedGraph& g, const Coloring& c);

// {"r":"p/q","cycle":[...],"images":["a/b",...]}
std::string cycle_map_to_json(const CycleMap& m);
CycleMap cycle_map_from_json(std::string_view text);

}  // namespace sgc
