#include "staircase/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace staircase {

namespace {

void check_a(const StaircaseA& a) {
  if (a.s < 1 || a.t < 1) {
    throw std::domain_error("staircase A requires s >= 1 and t >= 1");
  }
}

void check_b(const StaircaseB& b) {
  if (b.s < 0) throw std::domain_error("staircase B requires s >= 0");
}

bool contains_a(const StaircaseA& a, Point p) {
  check_a(a);
  if (p.x < 0 || p.y < 0) return false;
  // Horizontal run at y = (m+1)t spans ms <= x <= (m+1)s.
  if (p.y >= a.t && p.y % a.t == 0) {
    const long long m = p.y / a.t - 1;
    if (m * a.s <= p.x && p.x <= (m + 1) * a.s) return true;
  }
  // Vertical run at x = (m+1)s spans (m+1)t <= y <= (m+2)t.
  if (p.x >= a.s && p.x % a.s == 0) {
    const long long m = p.x / a.s - 1;
    if ((m + 1) * a.t <= p.y && p.y <= (m + 2) * a.t) return true;
  }
  return false;
}

bool contains_b(const StaircaseB& b, Point p) {
  check_b(b);
  if (p.x < 0 || p.y < 2) return false;
  if (p.y % 2 == 0) {
    const long long m = p.y / 2;
    // Horizontal run at y = 2m spans (m-1)s+1 <= x <= ms+1; the first run
    // (m = 1) additionally reaches back to x = 0.
    const long long lo = m == 1 ? 0 : (m - 1) * b.s + 1;
    if (lo <= p.x && p.x <= m * b.s + 1) return true;
  }
  if (b.s == 0) return p.x == 1;
  // Vertical run at x = ms+1 spans 2m <= y <= 2m+2.
  if (p.x >= b.s + 1 && (p.x - 1) % b.s == 0) {
    const long long m = (p.x - 1) / b.s;
    if (2 * m <= p.y && p.y <= 2 * m + 2) return true;
  }
  return false;
}

bool contains_generic(const GenericStaircase& g, Point p) {
  if (g.period.empty()) return p == g.origin;
  if (p.x < g.origin.x || p.y < g.origin.y) return false;
  const bool has_east = std::find(g.period.begin(), g.period.end(), Step::East) !=
                        g.period.end();
  const bool has_north = std::find(g.period.begin(), g.period.end(), Step::North) !=
                         g.period.end();
  if (!has_north) return p.y == g.origin.y;           // horizontal ray
  if (!has_east) return p.x == g.origin.x;            // vertical ray
  Point cur = g.origin;
  while (cur.x <= p.x || cur.y <= p.y) {
    if (cur == p) return true;
    for (Step s : g.period) {
      if (s == Step::East) ++cur.x; else ++cur.y;
      if (cur == p) return true;
    }
  }
  return false;
}

long long parse_ll(std::string_view text, std::string_view what) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("bad " + std::string(what) + " in boundary literal: '" +
                                std::string(text) + "'");
  }
  return value;
}

} // namespace

bool boundary_contains(const Boundary& boundary, Point p) {
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, StaircaseA>) return contains_a(b, p);
        else if constexpr (std::is_same_v<T, StaircaseB>) return contains_b(b, p);
        else if constexpr (std::is_same_v<T, GenericStaircase>) return contains_generic(b, p);
        else throw std::domain_error("a line bounds a region; point membership is not defined");
      },
      boundary);
}

bool avoids(const LatticePath& path, const Boundary& boundary) {
  if (const auto* line = std::get_if<StrictRightOfLine>(&boundary)) {
    if (line->k < 0) throw std::domain_error("line boundary requires k >= 0");
    Point p = path.start;
    const bool exempt_start = p == Point{0, 0};
    if (!exempt_start && p.x <= line->k * p.y) return false;
    for (Step s : path.steps) {
      if (s == Step::East) ++p.x; else ++p.y;
      if (p.x <= line->k * p.y) return false;
    }
    return true;
  }
  Point p = path.start;
  if (boundary_contains(boundary, p)) return false;
  for (Step s : path.steps) {
    if (s == Step::East) ++p.x; else ++p.y;
    if (boundary_contains(boundary, p)) return false;
  }
  return true;
}

bool touches_shifted_line(const LatticePath& path, long long k) {
  Point p = path.start;
  if (p.y > 0 && p.x == k * p.y + 1) return true;
  for (Step s : path.steps) {
    if (s == Step::East) ++p.x; else ++p.y;
    if (p.y > 0 && p.x == k * p.y + 1) return true;
  }
  return false;
}

std::optional<FirstHit> first_boundary_hit(const LatticePath& path,
                                           const Boundary& boundary) {
  Point p = path.start;
  if (boundary_contains(boundary, p)) return FirstHit{0, p};
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i] == Step::East) ++p.x; else ++p.y;
    if (boundary_contains(boundary, p)) return FirstHit{i + 1, p};
  }
  return std::nullopt;
}

long long residue_class(long long x, long long s) {
  if (s < 1) throw std::domain_error("residue_class requires s >= 1");
  const long long r = ((x % s) + s) % s;
  return r == 0 ? s : r;
}

std::vector<Point> boundary_polyline(const Boundary& boundary, Point max) {
  std::vector<Point> pts;
  auto walk = [&](Point origin, const std::vector<Step>& period) {
    Point cur = origin;
    auto in_box = [&](Point q) { return q.x <= max.x && q.y <= max.y; };
    if (in_box(cur)) pts.push_back(cur);
    if (period.empty()) return;
    // Both coordinates are nondecreasing, so once either limit is passed no
    // later point can re-enter the box.
    while (cur.x <= max.x && cur.y <= max.y) {
      for (Step s : period) {
        if (s == Step::East) ++cur.x; else ++cur.y;
        if (in_box(cur)) pts.push_back(cur);
      }
    }
  };
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, StaircaseA>) {
          check_a(b);
          std::vector<Step> period(static_cast<std::size_t>(b.s), Step::East);
          period.insert(period.end(), static_cast<std::size_t>(b.t), Step::North);
          walk(Point{0, b.t}, period);
        } else if constexpr (std::is_same_v<T, StaircaseB>) {
          check_b(b);
          std::vector<Step> first(static_cast<std::size_t>(b.s + 1), Step::East);
          Point cur{0, 2};
          if (cur.x <= max.x && cur.y <= max.y) pts.push_back(cur);
          for (Step s : first) {
            (void)s;
            ++cur.x;
            if (cur.x <= max.x && cur.y <= max.y) pts.push_back(cur);
          }
          std::vector<Step> period(2, Step::North);
          period.insert(period.end(), static_cast<std::size_t>(b.s), Step::East);
          const Point anchor = cur;
          if (anchor.x > max.x || anchor.y > max.y) return;
          pts.pop_back();  // anchor is in box, so it was pushed; walk re-adds it
          walk(anchor, period);
        } else if constexpr (std::is_same_v<T, StrictRightOfLine>) {
          if (b.k < 0) throw std::domain_error("line boundary requires k >= 0");
          for (long long y = 0; y <= max.y && b.k * y <= max.x; ++y) {
            pts.push_back(Point{b.k * y, y});
            if (b.k == 0) {
              for (long long yy = y + 1; yy <= max.y; ++yy) pts.push_back(Point{0, yy});
              break;
            }
          }
        } else {
          walk(b.origin, b.period);
        }
      },
      boundary);
  return pts;
}

Boundary parse_boundary(std::string_view literal) {
  if (literal.rfind("A:", 0) == 0) {
    std::string_view rest = literal.substr(2);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("boundary 'A:' needs s,t");
    }
    StaircaseA a{parse_ll(rest.substr(0, comma), "s"), parse_ll(rest.substr(comma + 1), "t")};
    check_a(a);
    return a;
  }
  if (literal.rfind("B:", 0) == 0) {
    StaircaseB b{parse_ll(literal.substr(2), "s")};
    check_b(b);
    return b;
  }
  if (literal.rfind("line:", 0) == 0) {
    StrictRightOfLine l{parse_ll(literal.substr(5), "k")};
    if (l.k < 0) throw std::domain_error("line boundary requires k >= 0");
    return l;
  }
  if (!literal.empty() && literal.front() == '@') {
    LatticePath p = parse_path(literal);
    if (p.steps.empty()) {
      throw std::invalid_argument("generic boundary pattern needs at least one step");
    }
    return GenericStaircase{p.start, p.steps};
  }
  throw std::invalid_argument("unrecognized boundary literal: '" + std::string(literal) + "'");
}

std::string boundary_literal(const Boundary& boundary) {
  return std::visit(
      [&](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, StaircaseA>) {
          return "A:" + std::to_string(b.s) + "," + std::to_string(b.t);
        } else if constexpr (std::is_same_v<T, StaircaseB>) {
          return "B:" + std::to_string(b.s);
        } else if constexpr (std::is_same_v<T, StrictRightOfLine>) {
          return "line:" + std::to_string(b.k);
        } else {
          return path_literal(LatticePath{b.origin, b.period});
        }
      },
      boundary);
}

} // namespace staircase
