#include "staircase/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace staircase::bijections {

namespace {

long long count_easts(const std::vector<Step>& steps) {
  return static_cast<long long>(std::count(steps.begin(), steps.end(), Step::East));
}

long long count_norths(const std::vector<Step>& steps) {
  return static_cast<long long>(steps.size()) - count_easts(steps);
}

long long step_potential(const std::vector<Step>& steps, long long k) {
  long long pot = 0;
  for (Step s : steps) pot += s == Step::East ? 1 : -k;
  return pot;
}

void check_stn(long long s, long long t, long long n) {
  if (s < 1 || t < 1 || n < 1) throw std::domain_error("requires s, t, n >= 1");
}

void check_j(long long j, long long s) {
  if (j < 1 || j > s) throw std::domain_error("requires 1 <= j <= s");
}

Point t_endpoint(long long s, long long t, long long n, long long i, Part part) {
  if (part == Part::One) return Point{s * n + 1, t * n + i};
  return Point{s * n, t * n + i - 1};
}

Point u_prime_start(long long t, long long j, Part part) {
  return part == Part::One ? Point{j - 1, t} : Point{j, t + 1};
}

// Points where the path turns North -> East.
std::vector<Point> nw_corner_points(const LatticePath& path) {
  std::vector<Point> out;
  Point p = path.start;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    if (path.steps[i] == Step::East) ++p.x; else ++p.y;
    if (path.steps[i] == Step::North && path.steps[i + 1] == Step::East) {
      out.push_back(p);
    }
  }
  return out;
}

void check_u_prime_shape(const LatticePath& path, long long s, long long t,
                         long long n, long long j, Part part) {
  check_stn(s, t, n);
  check_j(j, s);
  if (path.start != u_prime_start(t, j, part)) {
    throw std::domain_error("path must start at (j-1,t) for part one or (j,t+1) for part two");
  }
  if (path_end(path) != Point{s * n + j, t * n + t - 1}) {
    throw std::domain_error("path must end at (sn+j, tn+t-1)");
  }
}

// Monotone path determined by its northwest corners: east runs into each
// corner column, a north run up each corner row. Rejects corner sequences
// no monotone path realizes.
LatticePath path_from_corners(Point start, Point end, const std::vector<long long>& xs,
                              const std::vector<long long>& ys) {
  if (xs.size() != ys.size()) {
    throw std::domain_error("corner column and row counts differ");
  }
  LatticePath path;
  path.start = start;
  Point prev = start;
  auto run = [&](Step step, long long count) {
    if (count < 0) throw std::domain_error("corners do not describe a monotone path");
    path.steps.insert(path.steps.end(), static_cast<std::size_t>(count), step);
  };
  for (std::size_t c = 0; c < xs.size(); ++c) {
    run(Step::East, xs[c] - prev.x);
    run(Step::North, ys[c] - prev.y);
    if (ys[c] == prev.y || (c > 0 && xs[c] == prev.x)) {
      throw std::domain_error("corners must strictly increase");
    }
    prev = Point{xs[c], ys[c]};
  }
  if (!xs.empty() && end.x == prev.x) {
    throw std::domain_error("a corner cannot share the endpoint column");
  }
  run(Step::East, end.x - prev.x);
  run(Step::North, end.y - prev.y);
  return path;
}

} // namespace

std::optional<InterchangeSplit> split_at_first_boundary_hit(const LatticePath& path,
                                                            const StaircaseA& boundary) {
  const auto hit = first_boundary_hit(path, Boundary{boundary});
  if (!hit) return std::nullopt;
  if (hit->index == 0) throw std::logic_error("path starts on the staircase");
  if (path.steps[hit->index - 1] != Step::North) {
    throw std::logic_error("first staircase contact was by an east step");
  }
  InterchangeSplit split;
  split.rho.assign(path.steps.begin(),
                   path.steps.begin() + static_cast<std::ptrdiff_t>(hit->index - 1));
  split.sigma.assign(path.steps.begin() + static_cast<std::ptrdiff_t>(hit->index),
                     path.steps.end());
  split.bad_point = hit->point;
  split.j = residue_class(hit->point.x, boundary.s);
  return split;
}

EmbedResult embed_s1(const LatticePath& path) {
  if (path.start != Point{0, 0}) {
    throw std::domain_error("embedding expects a path from the origin");
  }
  std::size_t i = 0;
  while (i < path.steps.size() && path.steps[i] == Step::North) ++i;
  if (i == path.steps.size()) {
    throw std::domain_error("embedding expects at least one east step");
  }
  EmbedResult result;
  result.i = static_cast<long long>(i);
  result.path.start = Point{1, result.i};
  result.path.steps.assign(path.steps.begin() + static_cast<std::ptrdiff_t>(i + 1),
                           path.steps.end());
  result.path.steps.insert(result.path.steps.end(), i, Step::North);
  return result;
}

LatticePath interchange(const LatticePath& path, long long s, long long t,
                        long long n, Part part) {
  check_stn(s, t, n);
  const long long i = path.start.y;
  if (path.start.x != 1 || i < 0 || i > t - 1) {
    throw std::domain_error("path must start at (1,i) with 0 <= i <= t-1");
  }
  if (path_end(path) != t_endpoint(s, t, n, i, part)) {
    throw std::domain_error("path endpoint does not match the family");
  }
  const auto split = split_at_first_boundary_hit(path, StaircaseA{s, t});
  if (!split) {
    throw std::domain_error("path avoids the staircase; nothing to interchange");
  }
  LatticePath out;
  out.start = u_prime_start(t, split->j, part);
  out.steps = split->sigma;
  out.steps.push_back(Step::East);
  out.steps.insert(out.steps.end(), split->rho.begin(), split->rho.end());
  return out;
}

LatticePath interchange_inverse(const LatticePath& path, long long s, long long t,
                                long long n, long long j, Part part) {
  check_u_prime_shape(path, s, t, n, j, part);
  const StaircaseA a{s, t};
  const Boundary boundary{a};
  const auto pts = visited_points(path);
  std::optional<std::size_t> last;
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    if (boundary_contains(boundary, pts[idx])) last = idx;
  }
  if (!last) {
    throw std::domain_error("path never touches the staircase; not an interchange image");
  }
  const std::size_t cut = *last;
  if (cut >= path.steps.size() || path.steps[cut] != Step::East) {
    throw std::domain_error("the step after the last staircase contact must be east");
  }
  const std::vector<Step> sigma(path.steps.begin(),
                                path.steps.begin() + static_cast<std::ptrdiff_t>(cut));
  const std::vector<Step> rho(path.steps.begin() + static_cast<std::ptrdiff_t>(cut) + 1,
                              path.steps.end());
  const long long bx = 1 + count_easts(rho);
  if (residue_class(bx, s) != j) {
    throw std::domain_error("recovered contact column is not in residue class j");
  }
  // The start height i is whichever choice makes the rebuilt path's first
  // staircase contact the fatal north; the contact row pins it.
  std::vector<LatticePath> candidates;
  for (Point b : boundary_polyline(boundary, Point{bx, t * n + t})) {
    if (b.x != bx) continue;
    const long long i = b.y - count_norths(rho) - 1;
    if (i < 0 || i > t - 1) continue;
    LatticePath pi;
    pi.start = Point{1, i};
    pi.steps = rho;
    pi.steps.push_back(Step::North);
    pi.steps.insert(pi.steps.end(), sigma.begin(), sigma.end());
    const auto hit = first_boundary_hit(pi, boundary);
    if (!hit || hit->index != rho.size() + 1) continue;
    candidates.push_back(std::move(pi));
  }
  if (candidates.size() != 1) {
    throw std::logic_error("expected exactly one start height, found " +
                           std::to_string(candidates.size()));
  }
  return candidates.front();
}

AlphaBeta encode_alpha_beta(const LatticePath& path, long long s, long long t,
                            long long n, long long j, Part part) {
  check_u_prime_shape(path, s, t, n, j, part);
  if (part == Part::Two && (s * n < 2 || t * n < 2)) {
    throw std::domain_error("part two encoding requires sn >= 2 and tn >= 2");
  }
  const long long alen0 = part == Part::One ? s * n : s * n - 1;
  const long long blen = part == Part::One ? t * n + 1 : t * n;
  std::vector<std::uint8_t> alpha0(static_cast<std::size_t>(alen0), 0);
  BinaryString beta;
  beta.bits.assign(static_cast<std::size_t>(blen), 0);
  for (Point c : nw_corner_points(path)) {
    const long long xpos = part == Part::One ? c.x - j + 1 : c.x - j;
    if (xpos >= 1 && xpos <= alen0) alpha0[static_cast<std::size_t>(xpos - 1)] = 1;
    // xpos == 0 is the start column; the first-step flag carries it.
    const long long ypos = part == Part::One ? c.y - t : c.y - t - 1;
    if (ypos < 1 || ypos > blen - 2) {
      throw std::logic_error("corner row outside the digit range");
    }
    beta.bits[static_cast<std::size_t>(ypos - 1)] = 1;
  }
  beta.bits[static_cast<std::size_t>(blen - 2)] =
      path.steps.front() == Step::East ? 1 : 0;
  const Boundary boundary{StaircaseA{s, t}};
  std::optional<long long> contact_x;
  for (Point p : visited_points(path)) {
    if (boundary_contains(boundary, p)) contact_x = p.x;
  }
  if (!contact_x) {
    throw std::domain_error("path never touches the staircase; it has no code");
  }
  const long long d = part == Part::One ? *contact_x - j + 1
                                        : std::max<long long>(*contact_x - j, 1);
  if (d < 1 || d > alen0) {
    throw std::domain_error("last staircase contact falls outside the digit range");
  }
  beta.bits[static_cast<std::size_t>(blen - 1)] =
      static_cast<std::uint8_t>(1 - alpha0[static_cast<std::size_t>(d - 1)]);
  AlphaBeta out;
  out.alpha.bits = std::move(alpha0);
  out.alpha.bits.erase(out.alpha.bits.begin() + static_cast<std::ptrdiff_t>(d - 1));
  out.beta = std::move(beta);
  return out;
}

LatticePath decode_alpha_beta(const BinaryString& alpha, const BinaryString& beta,
                              long long s, long long t, long long n, long long j,
                              Part part) {
  check_stn(s, t, n);
  check_j(j, s);
  if (part == Part::Two && (s * n < 2 || t * n < 2)) {
    throw std::domain_error("part two decoding requires sn >= 2 and tn >= 2");
  }
  const long long alen = (part == Part::One ? s * n : s * n - 1) - 1;
  const long long blen = part == Part::One ? t * n + 1 : t * n;
  if (static_cast<long long>(alpha.bits.size()) != alen) {
    throw std::domain_error("alpha must have length sn-1 (part one) or sn-2 (part two)");
  }
  if (static_cast<long long>(beta.bits.size()) != blen) {
    throw std::domain_error("beta must have length tn+1 (part one) or tn (part two)");
  }
  if (weight(beta) != weight(alpha) + 2) {
    throw std::domain_error("beta must weigh exactly two more than alpha");
  }
  const std::uint8_t penultimate = beta.bits[static_cast<std::size_t>(blen - 2)];
  const std::uint8_t lastdigit = beta.bits[static_cast<std::size_t>(blen - 1)];
  const Point start = u_prime_start(t, j, part);
  const Point end{s * n + j, t * n + t - 1};
  std::vector<long long> ys;
  for (long long i = 1; i <= blen - 2; ++i) {
    if (beta.bits[static_cast<std::size_t>(i - 1)]) {
      ys.push_back(part == Part::One ? t + i : t + 1 + i);
    }
  }
  // The deleted digit's value is the complement of beta's last digit; only
  // its position is unknown. Encoding is injective, so exactly one insertion
  // position rebuilds a path whose code is the given pair (positions inside
  // a run of equal digits rebuild the same path, so any hit will do).
  for (long long d = 1; d <= alen + 1; ++d) {
    std::vector<std::uint8_t> alpha0 = alpha.bits;
    alpha0.insert(alpha0.begin() + static_cast<std::ptrdiff_t>(d - 1),
                  static_cast<std::uint8_t>(1 - lastdigit));
    std::vector<long long> xs;
    if (penultimate == 0) xs.push_back(start.x);
    for (long long p = 1; p <= alen + 1; ++p) {
      if (alpha0[static_cast<std::size_t>(p - 1)]) {
        xs.push_back(part == Part::One ? j + p - 1 : j + p);
      }
    }
    try {
      LatticePath path = path_from_corners(start, end, xs, ys);
      const AlphaBeta back = encode_alpha_beta(path, s, t, n, j, part);
      if (back.alpha == alpha && back.beta == beta) return path;
    } catch (const std::domain_error&) {
      // Candidate corners fit no monotone path or the path has no code.
    }
  }
  throw std::domain_error("alpha and beta are not the code of any path");
}

namespace {

// Rotation r of blocks with an optional separator rebuilt between them.
std::vector<Step> rotate_blocks(const std::vector<std::vector<Step>>& blocks,
                                std::size_t r, bool separated) {
  std::vector<Step> out;
  for (std::size_t u = 0; u < blocks.size(); ++u) {
    if (separated && u > 0) out.push_back(Step::North);
    const auto& block = blocks[(r + u) % blocks.size()];
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

ShiftResult unique_avoiding_rotation(const std::vector<std::vector<Step>>& blocks,
                                     bool separated, Point anchor,
                                     const StaircaseA& a) {
  std::optional<ShiftResult> found;
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    std::vector<Step> steps = rotate_blocks(blocks, r, separated);
    if (!avoids(LatticePath{anchor, steps}, Boundary{a})) continue;
    if (found) throw std::logic_error("more than one rotation avoids the staircase");
    found = ShiftResult{static_cast<long long>(r) + 1, std::move(steps)};
  }
  if (!found) throw std::logic_error("no rotation avoids the staircase");
  return *found;
}

} // namespace

ShiftResult raney_unique_shift_s1(const std::vector<Step>& steps, long long s,
                                  long long t, long long n) {
  check_stn(s, t, n);
  if (count_easts(steps) != s * n + 1 || count_norths(steps) != t * n) {
    throw std::domain_error("expected sn+1 east and tn north steps");
  }
  if (steps.back() != Step::North) {
    throw std::domain_error("expected a final north step");
  }
  std::vector<std::vector<Step>> blocks;
  std::vector<Step> current;
  long long norths_in_block = 0;
  for (Step step : steps) {
    current.push_back(step);
    if (step == Step::North && ++norths_in_block == t) {
      blocks.push_back(std::move(current));
      current.clear();
      norths_in_block = 0;
    }
  }
  return unique_avoiding_rotation(blocks, false, Point{0, 0}, StaircaseA{s, t});
}

ShiftResult raney_unique_shift_s2(const std::vector<Step>& steps, long long s,
                                  long long t, long long n) {
  check_stn(s, t, n);
  if (count_easts(steps) != s * n - 1 || count_norths(steps) != t * n - 1) {
    throw std::domain_error("expected sn-1 east and tn-1 north steps");
  }
  std::vector<std::vector<Step>> blocks;
  std::vector<Step> current;
  long long norths_seen = 0;
  for (Step step : steps) {
    if (step == Step::North && ++norths_seen % t == 0 &&
        blocks.size() + 1 < static_cast<std::size_t>(n)) {
      blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(step);
  }
  blocks.push_back(std::move(current));
  return unique_avoiding_rotation(blocks, true, Point{1, 0}, StaircaseA{s, t});
}

BinaryShiftResult raney_unique_shift_binary(const BinaryString& bits, long long n,
                                            long long s) {
  if (n < 1 || s < 0) throw std::domain_error("requires n >= 1 and s >= 0");
  if (static_cast<long long>(bits.bits.size()) != (s + 2) * n + 1) {
    throw std::domain_error("expected length (s+2)n+1");
  }
  if (bits.bits.front() != 0) throw std::domain_error("expected a leading 0");
  if (static_cast<long long>(change_count(bits)) != 2 * n - 1) {
    throw std::domain_error("expected exactly 2n-1 changes");
  }
  // 2n runs alternating 0-run/1-run; block u is the u-th such pair.
  std::vector<std::vector<std::uint8_t>> blocks;
  std::vector<std::uint8_t> current;
  for (std::size_t i = 0; i < bits.bits.size(); ++i) {
    if (!current.empty() && bits.bits[i] == 0 && bits.bits[i - 1] == 1) {
      blocks.push_back(std::move(current));
      current.clear();
    }
    current.push_back(bits.bits[i]);
  }
  blocks.push_back(std::move(current));
  std::optional<BinaryShiftResult> found;
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    BinaryString rotated;
    for (std::size_t u = 0; u < blocks.size(); ++u) {
      const auto& block = blocks[(r + u) % blocks.size()];
      rotated.bits.insert(rotated.bits.end(), block.begin(), block.end());
    }
    if (!is_admissible(rotated, n, s)) continue;
    if (found) throw std::logic_error("more than one rotation is admissible");
    found = BinaryShiftResult{static_cast<long long>(r) + 1, std::move(rotated)};
  }
  if (!found) throw std::logic_error("no rotation is admissible");
  return *found;
}

LatticePath move_norths_to_end(const LatticePath& path, long long s, long long t,
                               long long n) {
  check_stn(s, t, n);
  if (path.start != Point{1, 0}) throw std::domain_error("path must start at (1,0)");
  if (count_easts(path.steps) != s * n - 1 ||
      count_norths(path.steps) != t * n - 1) {
    throw std::domain_error("expected sn-1 east and tn-1 north steps");
  }
  std::size_t nu = 0;
  while (nu < path.steps.size() && path.steps[nu] == Step::North) ++nu;
  if (nu < 1 || static_cast<long long>(nu) > t - 1) {
    throw std::domain_error("expected 1 <= leading norths <= t-1");
  }
  LatticePath out;
  out.start = Point{1, static_cast<long long>(nu)};
  out.steps.assign(path.steps.begin() + static_cast<std::ptrdiff_t>(nu),
                   path.steps.end());
  out.steps.insert(out.steps.end(), nu, Step::North);
  return out;
}

LatticePath move_norths_to_front(const LatticePath& path, long long s, long long t,
                                 long long n) {
  check_stn(s, t, n);
  const long long nu = path.start.y;
  if (path.start.x != 1 || nu < 1 || nu > t - 1) {
    throw std::domain_error("path must start at (1,nu) with 1 <= nu <= t-1");
  }
  if (count_easts(path.steps) != s * n - 1 ||
      count_norths(path.steps) != t * n - 1) {
    throw std::domain_error("expected sn-1 east and tn-1 north steps");
  }
  const std::size_t len = path.steps.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(nu); ++i) {
    if (path.steps[len - 1 - i] != Step::North) {
      throw std::domain_error("expected at least nu trailing norths");
    }
  }
  LatticePath out;
  out.start = Point{1, 0};
  out.steps.assign(static_cast<std::size_t>(nu), Step::North);
  out.steps.insert(out.steps.end(), path.steps.begin(),
                   path.steps.end() - static_cast<std::ptrdiff_t>(nu));
  return out;
}

std::optional<Trisection> trisect(const std::vector<Step>& steps, long long k) {
  if (k < 0) throw std::domain_error("requires k >= 0");
  if (step_potential(steps, k) < k + 1) {
    throw std::domain_error("east potential must be at least k+1");
  }
  std::size_t trailing = 0;
  while (trailing < steps.size() && steps[steps.size() - 1 - trailing] == Step::East) {
    ++trailing;
  }
  if (static_cast<long long>(trailing) >= k + 1) return std::nullopt;
  const std::size_t ell = trailing + 1;  // the final north run's north plus easts
  const std::size_t cut = steps.size() - ell;
  const long long target = k + 1 - static_cast<long long>(ell);
  std::optional<std::size_t> split;
  long long pot = 0;
  if (pot == target) split = 0;
  for (std::size_t i = 0; i < cut; ++i) {
    pot += steps[i] == Step::East ? 1 : -k;
    if (pot == target) split = i + 1;
  }
  if (!split) throw std::logic_error("no prefix reaches the required potential");
  Trisection tri;
  tri.a.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(*split));
  tri.middle.assign(steps.begin() + static_cast<std::ptrdiff_t>(*split),
                    steps.begin() + static_cast<std::ptrdiff_t>(cut));
  tri.b.assign(steps.begin() + static_cast<std::ptrdiff_t>(cut), steps.end());
  if (tri.middle.empty()) throw std::logic_error("empty middle after trisection");
  return tri;
}

namespace {

void check_phi_k(long long k) {
  if (k < 1) throw std::domain_error("requires k >= 1");
}

long long phi_blocks(const LatticePath& path, long long k) {
  const long long period = 2 * (k + 1);
  const long long len = static_cast<long long>(path.steps.size());
  if (len < period || len % period != 0) {
    throw std::domain_error("length must be a positive multiple of 2(k+1)");
  }
  return len / period;
}

} // namespace

PhiDecomposition phi_decompose(const LatticePath& path, long long k) {
  check_phi_k(k);
  if (path.start != Point{0, 0}) throw std::domain_error("path must start at the origin");
  phi_blocks(path, k);
  if (!avoids(path, Boundary{StrictRightOfLine{k}})) {
    throw std::domain_error("path must stay strictly right of x = ky after the origin");
  }
  PhiDecomposition out;
  std::vector<Step> middle = path.steps;
  for (;;) {
    auto tri = trisect(middle, k);
    if (!tri) {
      out.kind = PhiCase::TrailingEasts;
      out.tail = std::move(middle);
      return out;
    }
    const bool even = count_norths(tri->a) % 2 == 0;
    out.pairs.emplace_back(std::move(tri->a), std::move(tri->b));
    if (even) {
      out.kind = PhiCase::EvenHeight;
      out.tail = std::move(tri->middle);
      return out;
    }
    middle = std::move(tri->middle);
  }
}

LatticePath phi(const LatticePath& path, long long k) {
  const PhiDecomposition dec = phi_decompose(path, k);
  LatticePath out;
  out.start = Point{0, 0};
  auto append = [&](const std::vector<Step>& part) {
    out.steps.insert(out.steps.end(), part.begin(), part.end());
  };
  if (dec.kind == PhiCase::EvenHeight) {
    out.steps.push_back(Step::East);
    append(dec.pairs.back().first);
    append(dec.pairs.back().second);
    for (std::size_t i = 0; i + 1 < dec.pairs.size(); ++i) {
      append(dec.pairs[i].first);
      append(dec.pairs[i].second);
    }
    append(dec.tail);
  } else {
    out.steps.push_back(Step::North);
    out.steps.insert(out.steps.end(), static_cast<std::size_t>(k + 1), Step::East);
    for (const auto& pair : dec.pairs) {
      append(pair.first);
      append(pair.second);
    }
    // The failing tail ends in at least k+1 easts; they become the prefix.
    out.steps.insert(out.steps.end(), dec.tail.begin(),
                     dec.tail.end() - static_cast<std::ptrdiff_t>(k + 1));
  }
  return out;
}

LatticePath phi_inverse(const LatticePath& path, long long k) {
  check_phi_k(k);
  if (path.start != Point{0, 0}) throw std::domain_error("path must start at the origin");
  const long long period = 2 * (k + 1);
  const long long len = static_cast<long long>(path.steps.size());
  if (len < period + 1 || len % period != 1) {
    throw std::domain_error("length must be 2(k+1)n + 1");
  }
  if (!avoids(path, Boundary{StaircaseB{2 * k}})) {
    throw std::domain_error("path must avoid the staircase from (0,2)");
  }
  if (!touches_shifted_line(path, k)) {
    throw std::domain_error("path must touch x = ky+1 above the axis");
  }
  const auto visits = waypoints(path, k);
  if (visits.empty()) throw std::logic_error("a touching avoider must visit a waypoint");
  // Block (q_{u-1}, q_u] split at its last north: b is the final north run
  // with trailing easts, a the rest.
  auto split_block = [&](long long from, long long to) {
    std::optional<std::size_t> last_north;
    for (long long i = from; i < to; ++i) {
      if (path.steps[static_cast<std::size_t>(i)] == Step::North) {
        last_north = static_cast<std::size_t>(i);
      }
    }
    if (!last_north) throw std::domain_error("waypoint block contains no north step");
    std::pair<std::vector<Step>, std::vector<Step>> out;
    out.first.assign(path.steps.begin() + static_cast<std::ptrdiff_t>(from),
                     path.steps.begin() + static_cast<std::ptrdiff_t>(*last_north));
    out.second.assign(path.steps.begin() + static_cast<std::ptrdiff_t>(*last_north),
                      path.steps.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
  };
  std::vector<std::pair<std::vector<Step>, std::vector<Step>>> pairs;
  std::vector<Step> tail;
  const long long r = static_cast<long long>(visits.size());
  if (path.steps.front() == Step::East) {
    // pairs come out as (a_m, b_m), (a_1, b_1), ..., (a_{m-1}, b_{m-1})
    for (long long u = 0; u < r; ++u) {
      const long long from = u == 0 ? 1 : visits[static_cast<std::size_t>(u - 1)].index;
      pairs.push_back(split_block(from, visits[static_cast<std::size_t>(u)].index));
    }
    std::rotate(pairs.begin(), pairs.begin() + 1, pairs.end());
    tail.assign(path.steps.begin() +
                    static_cast<std::ptrdiff_t>(visits.back().index),
                path.steps.end());
  } else {
    for (long long i = 1; i <= k + 1; ++i) {
      if (path.steps[static_cast<std::size_t>(i)] != Step::East) {
        throw std::domain_error("image paths starting north begin with N then k+1 easts");
      }
    }
    if (visits.front().index != k + 2) {
      throw std::domain_error("first waypoint visit must follow the opening easts");
    }
    for (long long u = 1; u < r; ++u) {
      pairs.push_back(split_block(visits[static_cast<std::size_t>(u - 1)].index,
                                  visits[static_cast<std::size_t>(u)].index));
    }
    tail.assign(path.steps.begin() +
                    static_cast<std::ptrdiff_t>(visits.back().index),
                path.steps.end());
    tail.insert(tail.end(), static_cast<std::size_t>(k + 1), Step::East);
  }
  LatticePath out;
  out.start = Point{0, 0};
  for (const auto& pair : pairs) {
    out.steps.insert(out.steps.end(), pair.first.begin(), pair.first.end());
  }
  out.steps.insert(out.steps.end(), tail.begin(), tail.end());
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    out.steps.insert(out.steps.end(), it->second.begin(), it->second.end());
  }
  if (!avoids(out, Boundary{StrictRightOfLine{k}})) {
    throw std::domain_error("path is not in the image of the bijection");
  }
  return out;
}

std::vector<WaypointVisit> waypoints(const LatticePath& path, long long k) {
  if (k < 0) throw std::domain_error("requires k >= 0");
  std::vector<WaypointVisit> out;
  Point p = path.start;
  auto is_waypoint = [&](Point q) {
    return q.y >= 1 && q.y % 2 == 1 && q.x == k * q.y + 1;
  };
  if (is_waypoint(p)) out.push_back(WaypointVisit{0, p});
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i] == Step::East) ++p.x; else ++p.y;
    if (is_waypoint(p)) out.push_back(WaypointVisit{static_cast<long long>(i) + 1, p});
  }
  return out;
}

} // namespace staircase::bijections
