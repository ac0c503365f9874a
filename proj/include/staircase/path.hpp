#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

enum class Step : std::uint8_t { East, North };

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// A lattice path: a start point plus a sequence of unit East/North steps.
struct LatticePath {
  Point start{};
  std::vector<Step> steps{};
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

LatticePath make_path(Point start, std::string_view steps);

Point path_end(const LatticePath& path);

// All points the path visits, in order, start included. Size is steps()+1.
std::vector<Point> visited_points(const LatticePath& path);

enum class Corner { NorthWest, SouthEast };

// NorthWest: arrive by North, leave by East. SouthEast: arrive by East,
// leave by North. Interior turns only; endpoints are never corners.
std::size_t corner_count(const LatticePath& path, Corner kind);

// The path with a North step prepended (start lowered by one so the
// original points are unchanged) and a North step appended. The result
// starts and ends with a north step, so its NorthWest and SouthEast
// corner counts are equal.
LatticePath augment_plus(const LatticePath& path);

// Potential of a point relative to the line x = ky: x - k*y.
long long potential(Point p, long long k);

// Literal syntax: optional "@x,y:" prefix, then a run of E/N characters.
// A bare run of steps means start (0,0). "@x,y:" alone is the empty path
// at (x,y). Rejects anything else.
LatticePath parse_path(std::string_view literal);
std::string path_literal(const LatticePath& path);

// Two endpoint schemes share the T/U machinery: part One families run
// (1,i) -> (sn+1, tn+i), part Two families run (1,i) -> (sn, tn+i-1).
enum class Part : std::uint8_t { One, Two };

} // namespace staircase
