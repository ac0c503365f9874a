#include "staircase/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "staircase/bijections.hpp"
#include "staircase/binary_string.hpp"
#include "staircase/boundary.hpp"
#include "staircase/formulas.hpp"
#include "staircase/path.hpp"

namespace staircase::verify {
namespace {

using formulas::binomial;

using Params = std::vector<std::pair<std::string, long long>>;
using Task = std::function<std::vector<VerificationReport>()>;

std::vector<long long> span(const std::optional<long long>& pin, long long lo,
                            long long hi) {
  if (pin) return {*pin};
  std::vector<long long> out;
  for (long long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

struct Stn {
  long long s, t, n;
};

std::vector<Stn> stn_grid(const GridOptions& g) {
  std::vector<Stn> out;
  if (!g.include.empty()) {
    for (const auto& e : g.include) out.push_back({e[0], e[1], e[2]});
    return out;
  }
  for (long long s : span(g.s, 1, g.max_s))
    for (long long t : span(g.t, 1, g.max_t))
      for (long long n : span(g.n, 1, g.max_n)) out.push_back({s, t, n});
  return out;
}

struct Sn {
  long long s, n;
};

// Binary-string suites allow s = 0.
std::vector<Sn> sn_grid(const GridOptions& g) {
  std::vector<Sn> out;
  if (!g.include.empty()) {
    for (const auto& e : g.include) out.push_back({e[0], e[2]});
    return out;
  }
  for (long long s : span(g.s, 0, g.max_s))
    for (long long n : span(g.n, 1, g.max_n)) out.push_back({s, n});
  return out;
}

struct Kn {
  long long k, n;
};

std::vector<Kn> kn_grid(const GridOptions& g, long long k_lo) {
  std::vector<Kn> out;
  for (long long k : span(g.k, k_lo, g.max_k))
    for (long long n : span(g.n, 1, g.max_n)) out.push_back({k, n});
  return out;
}

// Evaluates one grid point. Domain violations surface as a failed report,
// not an exception; GuardExceeded still propagates.
VerificationReport run_point(std::string suite, Params params,
                             const std::function<void(VerificationReport&)>& fill) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  try {
    fill(r);
  } catch (const std::logic_error& e) {
    r.match = false;
    r.note = e.what();
  }
  return r;
}

void set_values(VerificationReport& r, BigCount formula, BigCount oracle) {
  r.formula_value = std::move(formula);
  r.oracle_value = std::move(oracle);
  r.match = *r.formula_value == *r.oracle_value;
}

std::string steps_str(const std::vector<Step>& steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::East ? 'E' : 'N');
  return out;
}

void check_universe(const std::string& suite, const BigCount& size,
                    const oracle::Guard& guard) {
  if (size > BigCount(guard.limit)) {
    throw oracle::GuardExceeded(suite + ": universe of " + size.str() +
                                " sequences exceeds the guard of " +
                                std::to_string(guard.limit));
  }
}

BigCount hist_at(const std::map<long long, BigCount>& hist, long long c) {
  const auto it = hist.find(c);
  return it == hist.end() ? BigCount(0) : it->second;
}

void add_thm1(std::vector<Task>& tasks, const VerifyRequest& req, Part part) {
  for (const Stn& p : stn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard, part] {
      const std::string suite = part == Part::One ? "thm1-part1" : "thm1-part2";
      std::vector<VerificationReport> out;
      std::map<long long, BigCount> hist;
      try {
        if (part == Part::One) {
          hist = oracle::corner_histogram(oracle::S1Family{p.s, p.t, p.n}, true, guard);
        } else {
          hist = oracle::corner_histogram(oracle::S2Family{p.s, p.t, p.n}, true, guard);
        }
      } catch (const std::logic_error& e) {
        VerificationReport r;
        r.suite = suite;
        r.params = {{"s", p.s}, {"t", p.t}, {"n", p.n}};
        r.match = false;
        r.note = e.what();
        out.push_back(std::move(r));
        return out;
      }
      // Augmenting prepends a north step, so every path with an east step
      // has at least one NW corner; c = 0 only ever holds the s = n = 1
      // part-2 path, whose whole row is covered by the c = 1 report below.
      long long cmax = p.t * p.n + (part == Part::One ? 1 : 0);
      if (!hist.empty()) cmax = std::max(cmax, hist.rbegin()->first);
      const bool gap = part == Part::Two && p.s * p.n == 1;
      for (long long c = 1; c <= cmax; ++c) {
        out.push_back(run_point(
            suite, {{"s", p.s}, {"t", p.t}, {"n", p.n}, {"c", c}},
            [&](VerificationReport& r) {
              BigCount formula;
              if (part == Part::One) {
                formula = formulas::thm1_nw1(p.s, p.t, p.n, c);
              } else if (gap) {
                formula = c == 1 ? BigCount(p.t) : BigCount(0);
              } else {
                formula = formulas::thm1_nw2(p.s, p.t, p.n, c);
              }
              set_values(r, formula, hist_at(hist, c));
              if (gap) {
                r.note =
                    "known-gap: thm1-nw2 needs s*n >= 2; shown value reads "
                    "negative-argument binomials as zero";
              }
            }));
      }
      return out;
    });
  }
}

void add_cor2(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Stn& p : stn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      std::vector<VerificationReport> out;
      for (int part = 1; part <= 2; ++part) {
        out.push_back(run_point(
            "cor2", {{"s", p.s}, {"t", p.t}, {"n", p.n}, {"part", part}},
            [&](VerificationReport& r) {
              if (part == 1) {
                set_values(r, formulas::total1(p.s, p.t, p.n),
                           oracle::count(oracle::S1Family{p.s, p.t, p.n}, guard));
              } else {
                set_values(r, formulas::total2(p.s, p.t, p.n),
                           oracle::count(oracle::S2Family{p.s, p.t, p.n}, guard));
              }
            }));
      }
      return out;
    });
  }
}

void add_thm3(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Sn& p : sn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      std::vector<VerificationReport> out;
      for (long long r = 0; r <= 2 * p.n; ++r) {
        out.push_back(run_point(
            "thm3", {{"n", p.n}, {"s", p.s}, {"r", r}},
            [&](VerificationReport& rep) {
              set_values(rep, formulas::binary_count(p.n, p.s, r),
                         oracle::count(oracle::AdmissibleBinaryFamily{p.n, p.s, r},
                                       guard));
            }));
      }
      return out;
    });
  }
}

void add_recursion(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Sn& p : sn_grid(req.grid)) {
    if (p.n < 2) continue;
    tasks.push_back([p] {
      std::vector<VerificationReport> out;
      for (long long r = 0; r <= 2 * p.n - 2; ++r) {
        out.push_back(run_point(
            "recursion", {{"n", p.n}, {"s", p.s}, {"r", r}},
            [&](VerificationReport& rep) {
              BigCount rhs = 0;
              for (long long d = 0; d <= p.s + 2 && d <= r; ++d) {
                rhs += binomial(p.s + 2, d) *
                       formulas::binary_count(p.n - 1, p.s, r - d);
              }
              set_values(rep, formulas::binary_count(p.n, p.s, r), rhs);
            }));
      }
      return out;
    });
  }
}

void add_cor4(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Kn& p : kn_grid(req.grid, 0)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      std::vector<VerificationReport> out;
      const long long length = 2 * (p.k + 1) * p.n + 1;
      for (int variant = 1; variant <= 2; ++variant) {
        out.push_back(run_point(
            "cor4", {{"k", p.k}, {"n", p.n}, {"variant", variant}},
            [&](VerificationReport& r) {
              const BigCount formula = formulas::sum_count(p.k, p.n);
              if (variant == 1) {
                set_values(r, formula,
                           oracle::count(oracle::BAvoidersFamily{2 * p.k, length},
                                         guard));
              } else {
                set_values(r, formula,
                           oracle::count(oracle::LineAvoidersFamily{p.k, length},
                                         guard));
              }
            }));
      }
      return out;
    });
  }
}

void add_cor5(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Sn& p : sn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      std::vector<VerificationReport> out;
      out.push_back(run_point(
          "cor5", {{"n", p.n}, {"s", p.s}}, [&](VerificationReport& r) {
            set_values(r, formulas::binary_count(p.n, p.s, 2 * p.n),
                       oracle::count(oracle::AdmissibleBinaryFamily{p.n, p.s, 2 * p.n},
                                     guard));
          }));
      return out;
    });
  }
}

// Shared by the three Raney suites: sweep a whole arrangement universe,
// demand a unique qualifying rotation for every member (variant 1) and
// compare the number of distinct qualifying results with the implied
// count-divided-by-n formula (variant 2).
struct RaneySweep {
  BigCount swept = 0;
  BigCount ok = 0;
  std::set<std::string> distinct;
  std::string first_fail;
};

std::vector<VerificationReport> raney_reports(
    const std::string& suite, Params params, const BigCount& universe,
    const BigCount& implied, const std::function<void(RaneySweep&)>& sweep) {
  std::vector<VerificationReport> out;
  RaneySweep state;
  std::string sweep_error;
  try {
    sweep(state);
  } catch (const std::logic_error& e) {
    sweep_error = e.what();
  }
  for (int variant = 1; variant <= 2; ++variant) {
    Params p = params;
    p.emplace_back("variant", variant);
    VerificationReport r;
    r.suite = suite;
    r.params = std::move(p);
    if (!sweep_error.empty()) {
      r.match = false;
      r.note = sweep_error;
      out.push_back(std::move(r));
      continue;
    }
    if (variant == 1) {
      r.formula_value = universe;
      r.oracle_value = state.ok;
      r.match = state.ok == universe && state.swept == universe;
      if (!state.first_fail.empty()) r.note = "first failure " + state.first_fail;
    } else {
      set_values(r, implied, BigCount(state.distinct.size()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

void add_raney_s1(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Stn& p : stn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      const long long e = p.s * p.n, no = p.t * p.n;
      return raney_reports(
          "raney-s1", {{"s", p.s}, {"t", p.t}, {"n", p.n}},
          binomial(e + no, e + 1), formulas::total1(p.s, p.t, p.n),
          [&](RaneySweep& state) {
            check_universe("raney-s1", binomial(e + no, e + 1), guard);
            oracle::for_each_arrangement(e + 1, no - 1, [&](const std::vector<Step>& prefix) {
              std::vector<Step> seq = prefix;
              seq.push_back(Step::North);
              ++state.swept;
              try {
                const auto res = bijections::raney_unique_shift_s1(seq, p.s, p.t, p.n);
                ++state.ok;
                state.distinct.insert(steps_str(res.steps));
              } catch (const std::logic_error& ex) {
                if (state.first_fail.empty()) {
                  state.first_fail = steps_str(seq) + ": " + ex.what();
                }
              }
            });
          });
    });
  }
}

void add_raney_s2(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Stn& p : stn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      const long long e = p.s * p.n, no = p.t * p.n;
      return raney_reports(
          "raney-s2", {{"s", p.s}, {"t", p.t}, {"n", p.n}},
          binomial(e + no - 2, no - 1), formulas::total2(p.s, p.t, p.n),
          [&](RaneySweep& state) {
            check_universe("raney-s2", binomial(e + no - 2, no - 1), guard);
            oracle::for_each_arrangement(e - 1, no - 1, [&](const std::vector<Step>& seq) {
              ++state.swept;
              try {
                const auto res = bijections::raney_unique_shift_s2(seq, p.s, p.t, p.n);
                ++state.ok;
                state.distinct.insert(steps_str(res.steps));
              } catch (const std::logic_error& ex) {
                if (state.first_fail.empty()) {
                  state.first_fail = steps_str(seq) + ": " + ex.what();
                }
              }
            });
          });
    });
  }
}

void add_raney_binary(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Sn& p : sn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      const long long length = (p.s + 2) * p.n + 1;
      return raney_reports(
          "raney-binary", {{"n", p.n}, {"s", p.s}},
          binomial(length - 1, 2 * p.n - 1),
          formulas::exact_changes_count(p.n, p.s), [&](RaneySweep& state) {
            check_universe("raney-binary", binomial(length - 1, 2 * p.n - 1), guard);
            // A start-0 string with exactly 2n-1 changes is determined by
            // which of its length-1 gaps change (North) or repeat (East).
            oracle::for_each_arrangement(
                length - 2 * p.n, 2 * p.n - 1, [&](const std::vector<Step>& gaps) {
                  BinaryString bits;
                  bits.bits.reserve(length);
                  std::uint8_t cur = 0;
                  bits.bits.push_back(cur);
                  for (Step g : gaps) {
                    if (g == Step::North) cur ^= 1;
                    bits.bits.push_back(cur);
                  }
                  ++state.swept;
                  try {
                    const auto res = bijections::raney_unique_shift_binary(bits, p.n, p.s);
                    ++state.ok;
                    state.distinct.insert(bits_literal(res.bits));
                  } catch (const std::logic_error& ex) {
                    if (state.first_fail.empty()) {
                      state.first_fail = bits_literal(bits) + ": " + ex.what();
                    }
                  }
                });
          });
    });
  }
}

BigCount uj_size(const Stn& p, Part part) {
  const long long e = p.s * p.n, no = p.t * p.n;
  return part == Part::One ? binomial(e + no, no - 1) : binomial(e + no - 2, no - 2);
}

void add_interchange(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Stn& p : stn_grid(req.grid)) {
    for (long long j = 1; j <= p.s; ++j) {
      for (int part = 1; part <= 2; ++part) {
        const oracle::Guard guard = req.guard;
        tasks.push_back([p, j, part, guard] {
          const Part pp = part == 1 ? Part::One : Part::Two;
          const Params base = {{"s", p.s}, {"t", p.t}, {"n", p.n}, {"j", j}, {"part", part}};
          std::vector<VerificationReport> out;
          Params p1 = base;
          p1.emplace_back("variant", 1);
          out.push_back(run_point("interchange", std::move(p1), [&](VerificationReport& r) {
            set_values(r, uj_size(p, pp),
                       oracle::count(oracle::UjFamily{p.s, p.t, p.n, j, pp}, guard));
          }));
          Params p2 = base;
          p2.emplace_back("variant", 2);
          out.push_back(run_point("interchange", std::move(p2), [&](VerificationReport& r) {
            const auto members = oracle::enumerate(oracle::UjFamily{p.s, p.t, p.n, j, pp}, guard);
            const StaircaseA a{p.s, p.t};
            BigCount ok = 0;
            std::string fail;
            for (const LatticePath& pi : members) {
              try {
                const auto split = bijections::split_at_first_boundary_hit(pi, a);
                if (!split) throw std::logic_error("member avoids the staircase");
                const LatticePath image = bijections::interchange(pi, p.s, p.t, p.n, pp);
                long long expected = static_cast<long long>(corner_count(pi, Corner::NorthWest));
                if (!split->sigma.empty() && split->sigma.front() == Step::East) --expected;
                if (!split->sigma.empty() && split->sigma.back() == Step::North) ++expected;
                if (static_cast<long long>(corner_count(image, Corner::NorthWest)) != expected) {
                  throw std::logic_error("corner transfer law violated");
                }
                if (!(bijections::interchange_inverse(image, p.s, p.t, p.n, j, pp) == pi)) {
                  throw std::logic_error("inverse does not return the original path");
                }
                ++ok;
              } catch (const std::logic_error& ex) {
                if (fail.empty()) fail = path_literal(pi) + ": " + ex.what();
              }
            }
            set_values(r, BigCount(members.size()), ok);
            if (!fail.empty()) r.note = "first failure " + fail;
          }));
          return out;
        });
      }
    }
  }
}

void add_encode(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Stn& p : stn_grid(req.grid)) {
    for (long long j = 1; j <= p.s; ++j) {
      for (int part = 1; part <= 2; ++part) {
        // The part-2 code needs alpha digits (sn >= 2) and both beta flag
        // digits (tn >= 2); smaller grids have no code space to sweep.
        if (part == 2 && (p.s * p.n < 2 || p.t * p.n < 2)) continue;
        const oracle::Guard guard = req.guard;
        tasks.push_back([p, j, part, guard] {
          const Part pp = part == 1 ? Part::One : Part::Two;
          const Params base = {{"s", p.s}, {"t", p.t}, {"n", p.n}, {"j", j}, {"part", part}};
          std::vector<VerificationReport> out;
          Params p1 = base;
          p1.emplace_back("variant", 1);
          out.push_back(run_point("encode", std::move(p1), [&](VerificationReport& r) {
            const auto members = oracle::enumerate(oracle::UjFamily{p.s, p.t, p.n, j, pp}, guard);
            BigCount ok = 0;
            std::string fail;
            for (const LatticePath& pi : members) {
              try {
                const LatticePath image = bijections::interchange(pi, p.s, p.t, p.n, pp);
                const auto code = bijections::encode_alpha_beta(image, p.s, p.t, p.n, j, pp);
                if (weight(code.beta) != weight(code.alpha) + 2) {
                  throw std::logic_error("weight law violated");
                }
                if (!(bijections::decode_alpha_beta(code.alpha, code.beta, p.s, p.t,
                                                    p.n, j, pp) == image)) {
                  throw std::logic_error("decode(encode) differs from the path");
                }
                ++ok;
              } catch (const std::logic_error& ex) {
                if (fail.empty()) fail = path_literal(pi) + ": " + ex.what();
              }
            }
            set_values(r, BigCount(members.size()), ok);
            if (!fail.empty()) r.note = "first failure " + fail;
          }));
          Params p2 = base;
          p2.emplace_back("variant", 2);
          out.push_back(run_point("encode", std::move(p2), [&](VerificationReport& r) {
            const long long e = p.s * p.n, no = p.t * p.n;
            const long long alen = part == 1 ? e - 1 : e - 2;
            const long long blen = part == 1 ? no + 1 : no;
            if (alen + blen >= 62) {
              throw oracle::GuardExceeded("encode: code space too large to sweep");
            }
            check_universe("encode", BigCount(1) << static_cast<unsigned>(alen + blen), guard);
            BigCount ok = 0;
            std::string fail;
            for (std::uint64_t am = 0; am < (std::uint64_t{1} << alen); ++am) {
              BinaryString alpha;
              for (long long i = 0; i < alen; ++i) {
                alpha.bits.push_back(static_cast<std::uint8_t>((am >> i) & 1));
              }
              for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << blen); ++bm) {
                BinaryString beta;
                for (long long i = 0; i < blen; ++i) {
                  beta.bits.push_back(static_cast<std::uint8_t>((bm >> i) & 1));
                }
                if (weight(beta) != weight(alpha) + 2) continue;
                try {
                  const LatticePath decoded =
                      bijections::decode_alpha_beta(alpha, beta, p.s, p.t, p.n, j, pp);
                  (void)decoded;
                  ++ok;
                } catch (const std::logic_error& ex) {
                  if (fail.empty()) {
                    fail = bits_literal(alpha) + " " + bits_literal(beta) + ": " + ex.what();
                  }
                }
              }
            }
            set_values(r, uj_size(p, pp), ok);
            if (!fail.empty()) r.note = "first failure " + fail;
          }));
          return out;
        });
      }
    }
  }
}

void add_phi(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Kn& p : kn_grid(req.grid, 1)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      std::vector<VerificationReport> out;
      out.push_back(run_point(
          "phi", {{"k", p.k}, {"n", p.n}, {"variant", 1}}, [&](VerificationReport& r) {
            const auto members = oracle::enumerate(oracle::FFamily{p.k, p.n}, guard);
            const Boundary b{StaircaseB{2 * p.k}};
            BigCount ok = 0;
            std::set<std::string> images;
            std::string fail;
            for (const LatticePath& pi : members) {
              try {
                const LatticePath g = bijections::phi(pi, p.k);
                if (!avoids(g, b)) throw std::logic_error("image hits the staircase");
                if (!touches_shifted_line(g, p.k)) {
                  throw std::logic_error("image misses the shifted line");
                }
                if (bijections::waypoints(g, p.k).empty()) {
                  throw std::logic_error("image has no waypoint visit");
                }
                if (!images.insert(path_literal(g)).second) {
                  throw std::logic_error("duplicate image");
                }
                if (!(bijections::phi_inverse(g, p.k) == pi)) {
                  throw std::logic_error("inverse does not return the original path");
                }
                ++ok;
              } catch (const std::logic_error& ex) {
                if (fail.empty()) fail = path_literal(pi) + ": " + ex.what();
              }
            }
            set_values(r, BigCount(members.size()), ok);
            if (!fail.empty()) r.note = "first failure " + fail;
          }));
      out.push_back(run_point(
          "phi", {{"k", p.k}, {"n", p.n}, {"variant", 2}}, [&](VerificationReport& r) {
            const auto members = oracle::enumerate(oracle::GFamily{p.k, p.n}, guard);
            BigCount ok = 0;
            std::string fail;
            for (const LatticePath& g : members) {
              try {
                if (bijections::waypoints(g, p.k).empty() != !touches_shifted_line(g, p.k)) {
                  throw std::logic_error("waypoint visits disagree with the touch predicate");
                }
                const LatticePath pi = bijections::phi_inverse(g, p.k);
                if (!(bijections::phi(pi, p.k) == g)) {
                  throw std::logic_error("round trip does not return the original path");
                }
                ++ok;
              } catch (const std::logic_error& ex) {
                if (fail.empty()) fail = path_literal(g) + ": " + ex.what();
              }
            }
            set_values(r, BigCount(members.size()), ok);
            if (!fail.empty()) r.note = "first failure " + fail;
          }));
      return out;
    });
  }
}

// Closed-form membership against the literal boundary walk on [0,box]^2.
void characterization_fill(VerificationReport& r, const Boundary& boundary) {
  constexpr long long box = 40;
  const auto pts = boundary_polyline(boundary, Point{box, box});
  std::set<std::pair<long long, long long>> walked;
  for (const Point& q : pts) walked.insert({q.x, q.y});
  BigCount bad = 0;
  std::string first;
  for (long long x = 0; x <= box; ++x) {
    for (long long y = 0; y <= box; ++y) {
      const bool closed = boundary_contains(boundary, Point{x, y});
      const bool listed = walked.count({x, y}) != 0;
      if (closed != listed) {
        ++bad;
        if (first.empty()) {
          first = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
      }
    }
  }
  set_values(r, BigCount(0), bad);
  if (!first.empty()) r.note = "first disagreement at " + first;
}

void add_characterizations(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (long long s : span(req.grid.s, 1, req.grid.max_s)) {
    for (long long t : span(req.grid.t, 1, req.grid.max_t)) {
      tasks.push_back([s, t] {
        std::vector<VerificationReport> out;
        out.push_back(run_point("characterizations", {{"s", s}, {"t", t}},
                                [&](VerificationReport& r) {
                                  characterization_fill(r, Boundary{StaircaseA{s, t}});
                                }));
        return out;
      });
    }
  }
  for (long long s : span(req.grid.s, 0, req.grid.max_s)) {
    tasks.push_back([s] {
      std::vector<VerificationReport> out;
      out.push_back(run_point("characterizations", {{"s", s}},
                              [&](VerificationReport& r) {
                                characterization_fill(r, Boundary{StaircaseB{s}});
                              }));
      return out;
    });
  }
}

void add_delta_equivalence(std::vector<Task>& tasks, const VerifyRequest& req) {
  for (const Sn& p : sn_grid(req.grid)) {
    const oracle::Guard guard = req.guard;
    tasks.push_back([p, guard] {
      const long long length = (p.s + 2) * p.n + 1;
      std::vector<VerificationReport> out;
      out.push_back(run_point(
          "delta-equivalence", {{"n", p.n}, {"s", p.s}, {"variant", 1}},
          [&](VerificationReport& r) {
            if (length >= 62) {
              throw oracle::GuardExceeded("delta-equivalence: string space too large");
            }
            check_universe("delta-equivalence",
                           BigCount(1) << static_cast<unsigned>(length), guard);
            const Boundary b{StaircaseB{p.s}};
            BigCount mismatches = 0;
            std::string first;
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << length); ++u) {
              BinaryString bits;
              bits.bits.reserve(length);
              for (long long i = length - 1; i >= 0; --i) {
                bits.bits.push_back(static_cast<std::uint8_t>((u >> i) & 1));
              }
              const bool adm = is_admissible(bits, p.n, p.s);
              const bool avoid = avoids(delta_decode(bits), b);
              if (adm != avoid) {
                ++mismatches;
                if (first.empty()) first = bits_literal(bits);
              }
            }
            set_values(r, BigCount(0), mismatches);
            if (!first.empty()) r.note = "first disagreement " + first;
          }));
      out.push_back(run_point(
          "delta-equivalence", {{"n", p.n}, {"s", p.s}, {"variant", 2}},
          [&](VerificationReport& r) {
            set_values(r,
                       oracle::count(oracle::AdmissibleBinaryFamily{p.n, p.s, 2 * p.n},
                                     guard),
                       oracle::count(oracle::BAvoidersFamily{p.s, length}, guard));
          }));
      return out;
    });
  }
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {
      "thm1-part1", "thm1-part2", "cor2",        "thm3",
      "recursion",  "cor4",       "cor5",        "raney-s1",
      "raney-s2",   "raney-binary", "interchange", "encode",
      "phi",        "characterizations", "delta-equivalence"};
  return suites;
}

std::vector<VerificationReport> run_verify(const VerifyRequest& request) {
  const auto& names = known_suites();
  if (std::find(names.begin(), names.end(), request.suite) == names.end()) {
    std::string all;
    for (const auto& n : names) {
      if (!all.empty()) all += ", ";
      all += n;
    }
    throw std::invalid_argument("unknown suite '" + request.suite +
                                "'; expected one of: " + all);
  }

  std::vector<Task> tasks;
  if (request.suite == "thm1-part1") add_thm1(tasks, request, Part::One);
  else if (request.suite == "thm1-part2") add_thm1(tasks, request, Part::Two);
  else if (request.suite == "cor2") add_cor2(tasks, request);
  else if (request.suite == "thm3") add_thm3(tasks, request);
  else if (request.suite == "recursion") add_recursion(tasks, request);
  else if (request.suite == "cor4") add_cor4(tasks, request);
  else if (request.suite == "cor5") add_cor5(tasks, request);
  else if (request.suite == "raney-s1") add_raney_s1(tasks, request);
  else if (request.suite == "raney-s2") add_raney_s2(tasks, request);
  else if (request.suite == "raney-binary") add_raney_binary(tasks, request);
  else if (request.suite == "interchange") add_interchange(tasks, request);
  else if (request.suite == "encode") add_encode(tasks, request);
  else if (request.suite == "phi") add_phi(tasks, request);
  else if (request.suite == "characterizations") add_characterizations(tasks, request);
  else add_delta_equivalence(tasks, request);

  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        slots[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, request.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<VerificationReport> out;
  for (auto& slot : slots) {
    for (auto& r : slot) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace staircase::verify
