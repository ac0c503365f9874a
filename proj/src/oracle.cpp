#include "staircase/oracle.hpp"

#include <cstdlib>

namespace staircase::oracle {

unsigned long long default_guard_limit() {
  if (const char* env = std::getenv("STAIRCASE_GUARD")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return 1ull << 24;
}

Guard default_guard() { return Guard{default_guard_limit()}; }

namespace {

struct GuardCounter {
  unsigned long long used = 0;
  unsigned long long limit;
  std::string what;
  void tick() {
    if (++used > limit) {
      throw GuardExceeded("enumeration guard (" + std::to_string(limit) +
                          " nodes) exceeded while searching " + what);
    }
  }
};

std::string family_label(const PathFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        auto part_tag = [](Part p) { return p == Part::One ? "1" : "2"; };
        if constexpr (std::is_same_v<T, S1Family>) {
          return "S1(s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) +
                 ",n=" + std::to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, S2Family>) {
          return "S2(s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) +
                 ",n=" + std::to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, TFamily>) {
          return "T(s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) +
                 ",n=" + std::to_string(f.n) + ",part=" + part_tag(f.part) + ")";
        } else if constexpr (std::is_same_v<T, UjFamily>) {
          return "U(s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) +
                 ",n=" + std::to_string(f.n) + ",j=" + std::to_string(f.j) +
                 ",part=" + part_tag(f.part) + ")";
        } else if constexpr (std::is_same_v<T, FFamily>) {
          return "F(k=" + std::to_string(f.k) + ",n=" + std::to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, GFamily>) {
          return "G(k=" + std::to_string(f.k) + ",n=" + std::to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, LineAvoidersFamily>) {
          return "LineAvoiders(k=" + std::to_string(f.k) +
                 ",length=" + std::to_string(f.length) + ")";
        } else {
          return "BAvoiders(s=" + std::to_string(f.s) +
                 ",length=" + std::to_string(f.length) + ")";
        }
      },
      family);
}

void validate(const PathFamily& family) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, S1Family> || std::is_same_v<T, S2Family> ||
                      std::is_same_v<T, TFamily>) {
          if (f.s < 1 || f.t < 1 || f.n < 1) {
            throw std::domain_error("family requires s, t, n >= 1");
          }
        } else if constexpr (std::is_same_v<T, UjFamily>) {
          if (f.s < 1 || f.t < 1 || f.n < 1 || f.j < 1 || f.j > f.s) {
            throw std::domain_error("family requires s, t, n >= 1 and 1 <= j <= s");
          }
        } else if constexpr (std::is_same_v<T, FFamily> || std::is_same_v<T, GFamily>) {
          if (f.k < 0 || f.n < 1) throw std::domain_error("family requires k >= 0, n >= 1");
        } else if constexpr (std::is_same_v<T, LineAvoidersFamily>) {
          if (f.k < 0 || f.length < 0) {
            throw std::domain_error("family requires k >= 0, length >= 0");
          }
        } else {
          if (f.s < 0 || f.length < 0) {
            throw std::domain_error("family requires s >= 0, length >= 0");
          }
        }
      },
      family);
}

Point t_endpoint(long long s, long long t, long long n, long long i, Part part) {
  if (part == Part::One) return Point{s * n + 1, t * n + i};
  return Point{s * n, t * n + i - 1};
}

// All paths start -> end in lexicographic order, pruned by `keep` (checked
// on every newly visited point, start included).
void enumerate_rect(Point start, Point end,
                    const std::function<bool(Point)>& keep, GuardCounter& guard,
                    std::vector<LatticePath>& out) {
  if (end.x < start.x || end.y < start.y) return;
  if (!keep(start)) return;
  LatticePath path;
  path.start = start;
  const std::function<void(Point)> dfs = [&](Point p) {
    guard.tick();
    if (p == end) {
      out.push_back(path);
      return;
    }
    if (p.x < end.x) {
      const Point q{p.x + 1, p.y};
      if (keep(q)) {
        path.steps.push_back(Step::East);
        dfs(q);
        path.steps.pop_back();
      }
    }
    if (p.y < end.y) {
      const Point q{p.x, p.y + 1};
      if (keep(q)) {
        path.steps.push_back(Step::North);
        dfs(q);
        path.steps.pop_back();
      }
    }
  };
  dfs(start);
}

// All fixed-length paths from the origin in lexicographic order. `keep`
// prunes points; `accept` passes the finished path.
void enumerate_length(long long length, const std::function<bool(Point)>& keep,
                      const std::function<bool(const LatticePath&)>& accept,
                      GuardCounter& guard, std::vector<LatticePath>& out) {
  const Point origin{0, 0};
  if (!keep(origin)) return;
  LatticePath path;
  path.start = origin;
  const std::function<void(Point)> dfs = [&](Point p) {
    guard.tick();
    if (static_cast<long long>(path.steps.size()) == length) {
      if (accept(path)) out.push_back(path);
      return;
    }
    for (const Step step : {Step::East, Step::North}) {
      const Point q = step == Step::East ? Point{p.x + 1, p.y} : Point{p.x, p.y + 1};
      if (keep(q)) {
        path.steps.push_back(step);
        dfs(q);
        path.steps.pop_back();
      }
    }
  };
  dfs(origin);
}

bool strictly_right(Point p, long long k) { return p.x > k * p.y; }

std::function<bool(Point)> keep_off_boundary(const Boundary& boundary) {
  return [boundary](Point p) { return !boundary_contains(boundary, p); };
}

std::function<bool(Point)> keep_all() {
  return [](Point) { return true; };
}

std::function<bool(Point)> keep_right_of_line(long long k) {
  return [k](Point p) { return p == Point{0, 0} || strictly_right(p, k); };
}

std::vector<LatticePath> enumerate_t_union(long long s, long long t, long long n,
                                           Part part, GuardCounter& guard) {
  std::vector<LatticePath> out;
  for (long long i = 0; i < t; ++i) {
    enumerate_rect(Point{1, i}, t_endpoint(s, t, n, i, part), keep_all(), guard, out);
  }
  return out;
}

// Rectangle DP from start to end; cells failing `keep` hold zero paths.
BigCount count_rect(Point start, Point end, const std::function<bool(Point)>& keep) {
  if (end.x < start.x || end.y < start.y) return 0;
  const std::size_t width = static_cast<std::size_t>(end.x - start.x) + 1;
  const std::size_t height = static_cast<std::size_t>(end.y - start.y) + 1;
  std::vector<std::vector<BigCount>> grid(width, std::vector<BigCount>(height));
  for (std::size_t dx = 0; dx < width; ++dx) {
    for (std::size_t dy = 0; dy < height; ++dy) {
      const Point p{start.x + static_cast<long long>(dx),
                    start.y + static_cast<long long>(dy)};
      if (!keep(p)) continue;
      if (dx == 0 && dy == 0) {
        grid[dx][dy] = 1;
        continue;
      }
      if (dx > 0) grid[dx][dy] += grid[dx - 1][dy];
      if (dy > 0) grid[dx][dy] += grid[dx][dy - 1];
    }
  }
  return grid[width - 1][height - 1];
}

// Paths in the T rectangle whose first staircase contact is exactly `bad`:
// clean DP to a neighbor, one fatal step in, then anything to the end.
BigCount count_first_hit_through(Point start, Point end, const Boundary& boundary,
                                 Point bad) {
  if (bad.x < start.x || bad.y < start.y || bad.x > end.x || bad.y > end.y) return 0;
  const auto keep = keep_off_boundary(boundary);
  BigCount into_bad = 0;
  if (bad.x > start.x) into_bad += count_rect(start, Point{bad.x - 1, bad.y}, keep);
  if (bad.y > start.y) into_bad += count_rect(start, Point{bad.x, bad.y - 1}, keep);
  if (into_bad == 0) return 0;
  return into_bad * count_rect(bad, end, keep_all());
}

// Staircase points inside [start, end], in walk order.
std::vector<Point> boundary_points_in_rect(const Boundary& boundary, Point start,
                                           Point end) {
  std::vector<Point> pts = boundary_polyline(boundary, end);
  std::vector<Point> in;
  for (Point p : pts) {
    if (p.x >= start.x && p.y >= start.y) in.push_back(p);
  }
  return in;
}

BigCount count_uj(const UjFamily& f) {
  const Boundary boundary = StaircaseA{f.s, f.t};
  BigCount total = 0;
  for (long long i = 0; i < f.t; ++i) {
    const Point start{1, i};
    const Point end = t_endpoint(f.s, f.t, f.n, i, f.part);
    for (Point bad : boundary_points_in_rect(boundary, start, end)) {
      if (residue_class(bad.x, f.s) != f.j) continue;
      total += count_first_hit_through(start, end, boundary, bad);
    }
  }
  return total;
}

// Step-indexed DP over reachable points (plus a touched bit for GFamily).
BigCount count_layered(long long length, long long k_line, bool right_of_line,
                       const Boundary* avoid, bool need_touch, long long k_touch) {
  struct Key {
    Point p;
    bool touched;
    bool operator<(const Key& o) const {
      if (p.x != o.p.x) return p.x < o.p.x;
      if (p.y != o.p.y) return p.y < o.p.y;
      return touched < o.touched;
    }
  };
  auto ok = [&](Point p, bool is_origin) {
    if (right_of_line && !is_origin && !strictly_right(p, k_line)) return false;
    if (avoid && boundary_contains(*avoid, p)) return false;
    return true;
  };
  auto touches = [&](Point p) { return p.y > 0 && p.x == k_touch * p.y + 1; };
  std::map<Key, BigCount> layer;
  const Point origin{0, 0};
  if (!ok(origin, true)) return 0;
  layer[Key{origin, touches(origin)}] = 1;
  for (long long step = 0; step < length; ++step) {
    std::map<Key, BigCount> next;
    for (const auto& [key, ways] : layer) {
      for (const Step s : {Step::East, Step::North}) {
        const Point q = s == Step::East ? Point{key.p.x + 1, key.p.y}
                                        : Point{key.p.x, key.p.y + 1};
        if (!ok(q, false)) continue;
        next[Key{q, key.touched || touches(q)}] += ways;
      }
    }
    layer = std::move(next);
  }
  BigCount total = 0;
  for (const auto& [key, ways] : layer) {
    if (need_touch && !key.touched) continue;
    total += ways;
  }
  return total;
}

} // namespace

std::vector<LatticePath> enumerate(const PathFamily& family, const Guard& guard) {
  validate(family);
  GuardCounter counter{0, guard.limit, family_label(family)};
  return std::visit(
      [&](const auto& f) -> std::vector<LatticePath> {
        using T = std::decay_t<decltype(f)>;
        std::vector<LatticePath> out;
        if constexpr (std::is_same_v<T, S1Family>) {
          const Boundary a = StaircaseA{f.s, f.t};
          enumerate_rect(Point{0, 0}, Point{f.s * f.n + 1, f.t * f.n},
                         keep_off_boundary(a), counter, out);
        } else if constexpr (std::is_same_v<T, S2Family>) {
          const Boundary a = StaircaseA{f.s, f.t};
          enumerate_rect(Point{1, 0}, Point{f.s * f.n, f.t * f.n - 1},
                         keep_off_boundary(a), counter, out);
        } else if constexpr (std::is_same_v<T, TFamily>) {
          out = enumerate_t_union(f.s, f.t, f.n, f.part, counter);
        } else if constexpr (std::is_same_v<T, UjFamily>) {
          const Boundary a = StaircaseA{f.s, f.t};
          for (const LatticePath& path :
               enumerate_t_union(f.s, f.t, f.n, f.part, counter)) {
            const auto hit = first_boundary_hit(path, a);
            if (hit && residue_class(hit->point.x, f.s) == f.j) out.push_back(path);
          }
        } else if constexpr (std::is_same_v<T, FFamily>) {
          enumerate_length(2 * (f.k + 1) * f.n, keep_right_of_line(f.k),
                           [](const LatticePath&) { return true; }, counter, out);
        } else if constexpr (std::is_same_v<T, GFamily>) {
          const Boundary b = StaircaseB{2 * f.k};
          const long long k = f.k;
          enumerate_length(
              2 * (f.k + 1) * f.n + 1, keep_off_boundary(b),
              [k](const LatticePath& p) { return touches_shifted_line(p, k); },
              counter, out);
        } else if constexpr (std::is_same_v<T, LineAvoidersFamily>) {
          enumerate_length(f.length, keep_right_of_line(f.k),
                           [](const LatticePath&) { return true; }, counter, out);
        } else {
          const Boundary b = StaircaseB{f.s};
          enumerate_length(f.length, keep_off_boundary(b),
                           [](const LatticePath&) { return true; }, counter, out);
        }
        return out;
      },
      family);
}

std::vector<BinaryString> enumerate(const AdmissibleBinaryFamily& family,
                                    const Guard& guard) {
  if (family.n < 1 || family.s < 0 || family.r < 0) {
    throw std::domain_error("family requires n >= 1, s >= 0, r >= 0");
  }
  const long long length = (family.s + 2) * family.n + 1;
  if (length >= 63) {
    throw GuardExceeded("AdmissibleBinary length " + std::to_string(length) +
                        " too large to scan");
  }
  const unsigned long long total = 1ull << length;
  if (total > guard.limit) {
    throw GuardExceeded("enumeration guard (" + std::to_string(guard.limit) +
                        " nodes) exceeded while searching AdmissibleBinary(n=" +
                        std::to_string(family.n) + ",s=" + std::to_string(family.s) +
                        ",r=" + std::to_string(family.r) + ")");
  }
  std::vector<BinaryString> out;
  for (unsigned long long x = 0; x < total; ++x) {
    BinaryString b;
    b.bits.resize(static_cast<std::size_t>(length));
    for (long long i = 0; i < length; ++i) {
      b.bits[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((x >> (length - 1 - i)) & 1);
    }
    if (static_cast<long long>(change_count(b)) > family.r) continue;
    if (!is_admissible(b, family.n, family.s)) continue;
    out.push_back(std::move(b));
  }
  return out;
}

BigCount count(const PathFamily& family, const Guard&) {
  validate(family);
  return std::visit(
      [&](const auto& f) -> BigCount {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, S1Family>) {
          const Boundary a = StaircaseA{f.s, f.t};
          return count_rect(Point{0, 0}, Point{f.s * f.n + 1, f.t * f.n},
                            keep_off_boundary(a));
        } else if constexpr (std::is_same_v<T, S2Family>) {
          const Boundary a = StaircaseA{f.s, f.t};
          return count_rect(Point{1, 0}, Point{f.s * f.n, f.t * f.n - 1},
                            keep_off_boundary(a));
        } else if constexpr (std::is_same_v<T, TFamily>) {
          BigCount total = 0;
          for (long long i = 0; i < f.t; ++i) {
            total += count_rect(Point{1, i}, t_endpoint(f.s, f.t, f.n, i, f.part),
                                keep_all());
          }
          return total;
        } else if constexpr (std::is_same_v<T, UjFamily>) {
          return count_uj(f);
        } else if constexpr (std::is_same_v<T, FFamily>) {
          return count_layered(2 * (f.k + 1) * f.n, f.k, true, nullptr, false, 0);
        } else if constexpr (std::is_same_v<T, GFamily>) {
          const Boundary b = StaircaseB{2 * f.k};
          return count_layered(2 * (f.k + 1) * f.n + 1, 0, false, &b, true, f.k);
        } else if constexpr (std::is_same_v<T, LineAvoidersFamily>) {
          return count_layered(f.length, f.k, true, nullptr, false, 0);
        } else {
          const Boundary b = StaircaseB{f.s};
          return count_layered(f.length, 0, false, &b, false, 0);
        }
      },
      family);
}

BigCount count(const AdmissibleBinaryFamily& family, const Guard& guard) {
  return BigCount(enumerate(family, guard).size());
}

std::map<long long, BigCount> corner_histogram(const PathFamily& family,
                                               bool augmented, const Guard& guard) {
  if (!std::holds_alternative<S1Family>(family) &&
      !std::holds_alternative<S2Family>(family)) {
    throw std::domain_error("corner_histogram applies to the S1 and S2 families");
  }
  std::map<long long, BigCount> histogram;
  for (const LatticePath& path : enumerate(family, guard)) {
    const LatticePath counted = augmented ? augment_plus(path) : path;
    histogram[static_cast<long long>(corner_count(counted, Corner::NorthWest))] += 1;
  }
  return histogram;
}

void for_each_arrangement(long long easts, long long norths,
                          const std::function<void(const std::vector<Step>&)>& fn) {
  if (easts < 0 || norths < 0) {
    throw std::domain_error("for_each_arrangement requires nonnegative step counts");
  }
  std::vector<Step> steps;
  const std::function<void(long long, long long)> dfs = [&](long long e, long long n) {
    if (e == 0 && n == 0) {
      fn(steps);
      return;
    }
    if (e > 0) {
      steps.push_back(Step::East);
      dfs(e - 1, n);
      steps.pop_back();
    }
    if (n > 0) {
      steps.push_back(Step::North);
      dfs(e, n - 1);
      steps.pop_back();
    }
  };
  dfs(easts, norths);
}

} // namespace staircase::oracle
