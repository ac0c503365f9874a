#include "staircase/path.hpp"

#include <charconv>
#include <stdexcept>

namespace staircase {

LatticePath make_path(Point start, std::string_view steps) {
  LatticePath path;
  path.start = start;
  path.steps.reserve(steps.size());
  for (char c : steps) {
    switch (c) {
      case 'E': path.steps.push_back(Step::East); break;
      case 'N': path.steps.push_back(Step::North); break;
      default:
        throw std::invalid_argument("path step must be 'E' or 'N', got '" +
                                    std::string(1, c) + "'");
    }
  }
  return path;
}

Point path_end(const LatticePath& path) {
  Point p = path.start;
  for (Step s : path.steps) {
    if (s == Step::East) ++p.x; else ++p.y;
  }
  return p;
}

std::vector<Point> visited_points(const LatticePath& path) {
  std::vector<Point> pts;
  pts.reserve(path.steps.size() + 1);
  Point p = path.start;
  pts.push_back(p);
  for (Step s : path.steps) {
    if (s == Step::East) ++p.x; else ++p.y;
    pts.push_back(p);
  }
  return pts;
}

std::size_t corner_count(const LatticePath& path, Corner kind) {
  const Step arrive = kind == Corner::NorthWest ? Step::North : Step::East;
  const Step leave = kind == Corner::NorthWest ? Step::East : Step::North;
  std::size_t n = 0;
  for (std::size_t i = 1; i < path.steps.size(); ++i) {
    if (path.steps[i - 1] == arrive && path.steps[i] == leave) ++n;
  }
  return n;
}

LatticePath augment_plus(const LatticePath& path) {
  LatticePath out;
  out.start = Point{path.start.x, path.start.y - 1};
  out.steps.reserve(path.steps.size() + 2);
  out.steps.push_back(Step::North);
  out.steps.insert(out.steps.end(), path.steps.begin(), path.steps.end());
  out.steps.push_back(Step::North);
  return out;
}

long long potential(Point p, long long k) { return p.x - k * p.y; }

namespace {

long long parse_ll(std::string_view text, std::string_view what) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("bad " + std::string(what) + " in path literal: '" +
                                std::string(text) + "'");
  }
  return value;
}

} // namespace

LatticePath parse_path(std::string_view literal) {
  Point start{0, 0};
  std::string_view steps = literal;
  if (!literal.empty() && literal.front() == '@') {
    const auto colon = literal.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("path literal '" + std::string(literal) +
                                  "' has '@' but no ':'");
    }
    std::string_view coords = literal.substr(1, colon - 1);
    const auto comma = coords.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("path literal '" + std::string(literal) +
                                  "' needs '@x,y:'");
    }
    start.x = parse_ll(coords.substr(0, comma), "x coordinate");
    start.y = parse_ll(coords.substr(comma + 1), "y coordinate");
    steps = literal.substr(colon + 1);
  }
  return make_path(start, steps);
}

std::string path_literal(const LatticePath& path) {
  std::string steps;
  steps.reserve(path.steps.size());
  for (Step s : path.steps) steps.push_back(s == Step::East ? 'E' : 'N');
  if (path.start == Point{0, 0} && !path.steps.empty()) return steps;
  return "@" + std::to_string(path.start.x) + "," + std::to_string(path.start.y) +
         ":" + steps;
}

} // namespace staircase
