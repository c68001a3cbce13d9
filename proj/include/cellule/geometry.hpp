#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cellule/coxeter.hpp"
#include "cellule/rational.hpp"

namespace cellule {

// H_{alpha,n} = {x : <x, alpha-check> = n}, identified by the direction
// (index into the positive roots) and the integer level.
struct Hyperplane {
  int root = 0;
  std::int64_t level = 0;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.root == b.root && a.level == b.level;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return a.root != b.root ? a.root < b.root : a.level < b.level;
  }
};

// Strip of direction i between H_{alpha_i,lower} and H_{alpha_i,lower+1}.
struct Strip {
  int direction = 0;
  std::int64_t lower = 0;
};

struct Alcove {
  Element elem;
  std::vector<Rat> rep;  // interior representative point: image of the A0 barycenter
};

Alcove alcove_of(const Element& w);
inline const Element& element_of(const Alcove& a) { return a.elem; }
std::vector<Rat> rep_point(const Element& w);

// Left action of a generator: the unique alcove across the type-s face.
Alcove act_generator(int s, const Alcove& a);

std::vector<Hyperplane> separating_hyperplanes(const Alcove& a, const Alcove& b);
std::vector<Hyperplane> separating_hyperplanes(const Element& a, const Element& b);

// The unique hyperplane separating w A0 from (s w) A0.
Hyperplane crossing_hyperplane(int s, const Element& w);

Strip strip_of(int direction, const Alcove& a);

// Per direction, the maximal strip containing the alcove: the interval
// between the nearest hyperplanes of maximal weight in that direction.
struct MaxStripRegion {
  std::vector<std::pair<std::int64_t, std::int64_t>> interval;  // [lo, hi] levels per direction
};
MaxStripRegion maximal_strip_region(const Alcove& a);

// Strip criterion for the lowest two-sided cell: w A0 is not contained in
// any maximal strip through A0.
bool outside_max_strips(const Element& w);

// The data entering the local degree bound for a pair (x, y).
struct BoundContext {
  Element x, y;
  std::vector<Hyperplane> h_xy;        // H(A0,yA0) intersect H(yA0,xyA0)
  std::vector<int> directions;         // I_{x,y}, sorted
  std::map<int, int> c_per_direction;  // direction -> max weight over h_xy
  int c_total = 0;
};
BoundContext bound_context(const Element& x, const Element& y);

// Image of a hyperplane under the reflection in `mirror`.
Hyperplane reflect_hyperplane(const CoxeterSystem& sys, const Hyperplane& h, const Hyperplane& mirror);

// Classification of H in H_{xs,y} (for xs < x, sy < y) by which of the four
// regions cut out by H and the crossing hyperplane of s at y its mirror
// image meets.
enum class SType { Type1, Type2, Fixed };
SType s_type_classify(const Hyperplane& h, const Element& x, const Element& y, int s);

struct SpecialPoint {
  std::vector<Rat> coords;
  int m_value = 0;
  // Filled when the point is a vertex of A0 (in particular for all orbit
  // representatives): the stabilizer is then the standard parabolic W_J.
  bool has_parabolic_data = false;
  std::vector<int> stabilizer_gens;
  Element w_lambda;
};

// All special points (0-dimensional facets of maximal total hyperplane
// weight) with |<x, alpha-check>| <= radius in every direction.
std::vector<SpecialPoint> special_points(const CoxeterSystem& sys, int radius);

// One representative per orbit of the reflection group on special points,
// chosen among the special vertices of A0; orbit count is checked for
// stability against radius+1.
std::vector<SpecialPoint> omega_orbit_reps(const CoxeterSystem& sys, int radius);

// Orbit partition of all special points in the box, aligned with the
// representatives returned by omega_orbit_reps.
struct OrbitData {
  std::vector<SpecialPoint> reps;
  std::vector<SpecialPoint> points;
  std::vector<int> orbit_of_point;  // index into reps
};
OrbitData special_point_orbits(const CoxeterSystem& sys, int radius);

// Open simplicial cone at a special vertex, cut out by the hyperplanes
// through it, recorded as the sign pattern of an interior alcove.
struct Quarter {
  std::vector<Rat> vertex;
  std::vector<std::pair<int, std::int64_t>> walls;  // (direction, level) through the vertex
  std::vector<int> signs;                           // matching sign per wall
};
Quarter quarter_of(const CoxeterSystem& sys, const std::vector<Rat>& vertex, const Alcove& inside);
bool quarter_contains(const Quarter& q, const Alcove& a);

}  // namespace cellule
