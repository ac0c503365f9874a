#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "staircase/path.hpp"

namespace staircase {

// Staircase anchored at (0,t): s east steps, then t north steps, repeating.
// Requires s >= 1 and t >= 1.
struct StaircaseA {
  long long s = 1;
  long long t = 1;
  friend bool operator==(const StaircaseA&, const StaircaseA&) = default;
};

// Staircase anchored at (0,2): s+1 east steps first, then 2 north / s east
// alternating forever. s = 0 degenerates to the vertical ray x=1, y>=2
// together with (0,2). Requires s >= 0.
struct StaircaseB {
  long long s = 0;
  friend bool operator==(const StaircaseB&, const StaircaseB&) = default;
};

// Region constraint, not a point set: a path avoids it when every visited
// point satisfies x > k*y, except that a start at the origin is exempt.
struct StrictRightOfLine {
  long long k = 0;
  friend bool operator==(const StrictRightOfLine&, const StrictRightOfLine&) = default;
};

// Staircase obtained by repeating an arbitrary step pattern from an origin.
struct GenericStaircase {
  Point origin{};
  std::vector<Step> period{};
  friend bool operator==(const GenericStaircase&, const GenericStaircase&) = default;
};

using Boundary = std::variant<StaircaseA, StaircaseB, StrictRightOfLine, GenericStaircase>;

// Point membership for staircase boundaries, O(1) for A and B. Throws
// std::domain_error for StrictRightOfLine, which constrains a side of the
// plane rather than tracing a point set.
bool boundary_contains(const Boundary& boundary, Point p);

// Whether the path stays clear of the boundary: no visited point lies on a
// staircase; every visited point is strictly right of the line (leading
// origin exempt).
bool avoids(const LatticePath& path, const Boundary& boundary);

// Whether the path visits a point with x == k*y + 1 and y > 0.
bool touches_shifted_line(const LatticePath& path, long long k);

// Boundary points in walk order, clipped to x <= max.x and y <= max.y.
// For the line this is the points (k*y, y); used for rendering.
std::vector<Point> boundary_polyline(const Boundary& boundary, Point max);

// First visited point lying on the boundary, if any, with its step index
// (0 = the start point itself).
struct FirstHit {
  std::size_t index;
  Point point;
};
std::optional<FirstHit> first_boundary_hit(const LatticePath& path,
                                           const Boundary& boundary);

// Residue class of x in 1..s (multiples of s map to s, not 0).
long long residue_class(long long x, long long s);

// Literal syntax: "A:s,t" | "B:s" | "line:k" | "@x,y:STEPS".
Boundary parse_boundary(std::string_view literal);
std::string boundary_literal(const Boundary& boundary);

} // namespace staircase
