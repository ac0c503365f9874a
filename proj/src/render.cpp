#include "staircase/render.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "staircase/bijections.hpp"

namespace staircase::render {
namespace {

struct Extent {
  long long xmax;
  long long ymax;
};

// Box large enough for the path, with a small floor so a bare grid is
// still visible.
Extent extent_of(const LatticePath& path) {
  Extent e{4, 4};
  for (const Point& p : visited_points(path)) {
    e.xmax = std::max(e.xmax, p.x);
    e.ymax = std::max(e.ymax, p.y);
  }
  return e;
}

bool inside(const Extent& e, Point p) {
  return p.x >= 0 && p.y >= 0 && p.x <= e.xmax && p.y <= e.ymax;
}

}  // namespace

std::string render_ascii(const LatticePath& path, const RenderOptions& options) {
  const Extent e = extent_of(path);
  const long long width = 2 * e.xmax + 1;
  const long long height = 2 * e.ymax + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(height),
                                  std::string(static_cast<std::size_t>(width), ' '));
  const auto put = [&](long long cx, long long cy, char ch) {
    if (cx < 0 || cy < 0 || cx >= width || cy >= height) return;
    canvas[static_cast<std::size_t>(cy)][static_cast<std::size_t>(cx)] = ch;
  };
  const auto mark = [&](Point p, char ch) {
    if (inside(e, p)) put(2 * p.x, 2 * (e.ymax - p.y), ch);
  };

  for (long long y = 0; y <= e.ymax; ++y) {
    for (long long x = 0; x <= e.xmax; ++x) mark(Point{x, y}, '.');
  }
  if (options.boundary) {
    for (const Point& b : boundary_polyline(*options.boundary, Point{e.xmax, e.ymax})) {
      mark(b, '#');
    }
  }
  if (!path.steps.empty()) {
    Point cur = path.start;
    for (Step st : path.steps) {
      if (st == Step::East) {
        if (cur.y >= 0 && cur.y <= e.ymax) put(2 * cur.x + 1, 2 * (e.ymax - cur.y), '-');
        ++cur.x;
      } else {
        if (cur.x >= 0 && cur.x <= e.xmax) put(2 * cur.x, 2 * (e.ymax - cur.y) - 1, '|');
        ++cur.y;
      }
    }
    const bool pointy = options.boundary &&
                        !std::holds_alternative<StrictRightOfLine>(*options.boundary);
    for (const Point& p : visited_points(path)) {
      const bool clash = pointy && boundary_contains(*options.boundary, p);
      mark(p, clash ? 'X' : 'o');
    }
    if (options.k) {
      for (const auto& visit : bijections::waypoints(path, *options.k)) {
        mark(visit.point, '@');
      }
    }
  }

  std::string out;
  out.reserve(static_cast<std::size_t>((width + 1) * height));
  for (const auto& row : canvas) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const LatticePath& path, const RenderOptions& options) {
  constexpr long long cell = 20;
  constexpr long long margin = 20;
  const Extent e = extent_of(path);
  const long long width = 2 * margin + cell * e.xmax;
  const long long height = 2 * margin + cell * e.ymax;
  const auto sx = [&](long long x) { return margin + cell * x; };
  const auto sy = [&](long long y) { return margin + cell * (e.ymax - y); };
  const auto num = [](long long v) { return std::to_string(v); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";
  out += "<rect width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
  for (long long x = 0; x <= e.xmax; ++x) {
    out += "<line x1=\"" + num(sx(x)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
           num(sx(x)) + "\" y2=\"" + num(sy(e.ymax)) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  for (long long y = 0; y <= e.ymax; ++y) {
    out += "<line x1=\"" + num(sx(0)) + "\" y1=\"" + num(sy(y)) + "\" x2=\"" +
           num(sx(e.xmax)) + "\" y2=\"" + num(sy(y)) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  if (options.boundary) {
    const auto pts = boundary_polyline(*options.boundary, Point{e.xmax, e.ymax});
    if (!pts.empty()) {
      out += "<polyline points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += num(sx(pts[i].x)) + "," + num(sy(pts[i].y));
      }
      out += "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"2\""
             " stroke-dasharray=\"6 4\"/>\n";
    }
  }
  if (!path.steps.empty()) {
    out += "<polyline points=\"";
    const auto pts = visited_points(path);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += num(sx(pts[i].x)) + "," + num(sy(pts[i].y));
    }
    out += "\" fill=\"none\" stroke=\"#cc2222\" stroke-width=\"3\"/>\n";
    out += "<circle cx=\"" + num(sx(path.start.x)) + "\" cy=\"" +
           num(sy(path.start.y)) + "\" r=\"4\" fill=\"#cc2222\"/>\n";
    if (options.k) {
      for (const auto& visit : bijections::waypoints(path, *options.k)) {
        out += "<circle cx=\"" + num(sx(visit.point.x)) + "\" cy=\"" +
               num(sy(visit.point.y)) +
               "\" r=\"6\" fill=\"none\" stroke=\"#2266cc\" stroke-width=\"2\"/>\n";
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace staircase::render
