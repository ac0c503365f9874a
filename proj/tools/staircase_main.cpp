#include <CLI11.hpp>

#include <fstream>
#include <initializer_list>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "staircase/bijections.hpp"
#include "staircase/binary_string.hpp"
#include "staircase/boundary.hpp"
#include "staircase/formulas.hpp"
#include "staircase/oracle.hpp"
#include "staircase/path.hpp"
#include "staircase/render.hpp"
#include "staircase/report.hpp"
#include "staircase/search.hpp"
#include "staircase/verify.hpp"

namespace {

using namespace staircase;

// Bad invocation (exit 2), as opposed to an input outside a map's
// mathematical domain (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long to_ll(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + text + "'");
  }
}

std::string steps_str(const std::vector<Step>& steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::East ? 'E' : 'N');
  return out;
}

// ---------------------------------------------------------------- count --

int run_count(const std::string& formula, const std::vector<std::string>& args) {
  try {
    std::map<std::string, long long> kv;
    for (const auto& a : args) {
      const auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("parameters are name=value, got '" + a + "'");
      }
      const std::string name = a.substr(0, eq);
      if (kv.count(name)) throw UsageError("duplicate parameter '" + name + "'");
      kv[name] = to_ll(a.substr(eq + 1), name);
    }
    const auto take = [&](std::initializer_list<const char*> names) {
      std::vector<long long> vals;
      for (const char* n : names) {
        const auto it = kv.find(n);
        if (it == kv.end()) {
          throw UsageError(std::string("formula needs parameter '") + n + "'");
        }
        vals.push_back(it->second);
        kv.erase(it);
      }
      if (!kv.empty()) throw UsageError("unknown parameter '" + kv.begin()->first + "'");
      return vals;
    };

    BigCount value;
    if (formula == "classic") {
      const auto v = take({"k", "a", "b"});
      value = formulas::classic_count(v[0], v[1], v[2]);
    } else if (formula == "classic-nw") {
      const auto v = take({"k", "a", "b", "c"});
      value = formulas::classic_nw_count(v[0], v[1], v[2], v[3]);
    } else if (formula == "thm1-nw1") {
      const auto v = take({"s", "t", "n", "c"});
      value = formulas::thm1_nw1(v[0], v[1], v[2], v[3]);
    } else if (formula == "thm1-nw2") {
      const auto v = take({"s", "t", "n", "c"});
      value = formulas::thm1_nw2(v[0], v[1], v[2], v[3]);
    } else if (formula == "total1") {
      const auto v = take({"s", "t", "n"});
      value = formulas::total1(v[0], v[1], v[2]);
    } else if (formula == "total2") {
      const auto v = take({"s", "t", "n"});
      value = formulas::total2(v[0], v[1], v[2]);
    } else if (formula == "binary") {
      const auto v = take({"n", "s", "r"});
      value = formulas::binary_count(v[0], v[1], v[2]);
    } else if (formula == "sum") {
      const auto v = take({"k", "n"});
      value = formulas::sum_count(v[0], v[1]);
    } else if (formula == "exact-changes") {
      const auto v = take({"n", "s"});
      value = formulas::exact_changes_count(v[0], v[1]);
    } else {
      throw UsageError("unknown formula '" + formula + "'");
    }
    std::cout << value.str() << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // count treats precondition violations as bad usage
    std::cerr << e.what() << "\n";
    return 2;
  }
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
  verify::VerifyRequest request;
  std::vector<std::string> includes;
  std::string format = "text";
  bool allow_known_gaps = false;
};

int run_verify_cmd(VerifyArgs args) {
  try {
    for (const auto& inc : args.includes) {
      long long s = 0, t = 1, n = 0;
      bool have_s = false, have_n = false;
      std::size_t pos = 0;
      while (pos <= inc.size()) {
        const auto comma = inc.find(',', pos);
        const std::string item =
            inc.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw UsageError("--include items are name=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const long long val = to_ll(item.substr(eq + 1), key);
        if (key == "s") {
          s = val;
          have_s = true;
        } else if (key == "t") {
          t = val;
        } else if (key == "n") {
          n = val;
          have_n = true;
        } else {
          throw UsageError("--include keys are s, t, n; got '" + key + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (!have_s || !have_n) throw UsageError("--include needs at least s=.. and n=..");
      args.request.grid.include.push_back({s, t, n});
    }

    const auto reports = verify::run_verify(args.request);
    std::size_t mismatches = 0, excused = 0;
    for (const auto& r : reports) {
      std::cout << (args.format == "jsonl" ? to_json_line(r) : to_text_line(r)) << "\n";
      if (!r.match) {
        if (args.allow_known_gaps && is_known_gap(r)) {
          ++excused;
        } else {
          ++mismatches;
        }
      }
    }
    if (args.format == "text") {
      std::cout << reports.size() << " reports, " << mismatches << " mismatches";
      if (excused) std::cout << ", " << excused << " known gaps excused";
      std::cout << "\n";
    }
    return mismatches == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const oracle::GuardExceeded& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

// --------------------------------------------------------------- biject --

struct BijectArgs {
  std::string map;
  std::optional<long long> s, t, n, j, k;
  long long part = 1;
  bool round_trip = false;
  std::vector<std::string> inputs;
};

int run_biject(const BijectArgs& a) {
  try {
    const auto need = [](const std::optional<long long>& v, const char* name) {
      if (!v) throw UsageError(std::string("this map needs --") + name);
      return *v;
    };
    const auto need_inputs = [&](std::size_t count) {
      if (a.inputs.size() != count) {
        throw UsageError("this map takes " + std::to_string(count) + " input literal(s), got " +
                         std::to_string(a.inputs.size()));
      }
    };
    const auto bare_steps = [](const std::string& literal) {
      if (literal.find('@') != std::string::npos) {
        throw UsageError("this map takes a bare step string, not an anchored path");
      }
      return parse_path(literal).steps;
    };
    if (a.part != 1 && a.part != 2) throw UsageError("--part must be 1 or 2");
    const Part part = a.part == 1 ? Part::One : Part::Two;
    const auto no_round_trip = [&] {
      if (a.round_trip) throw UsageError("--round-trip is not available for this map");
    };

    if (a.map == "interchange") {
      need_inputs(1);
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n");
      const LatticePath path = parse_path(a.inputs[0]);
      const LatticePath image = bijections::interchange(path, s, t, n, part);
      std::cout << path_literal(image) << "\n";
      if (a.round_trip) {
        const auto split = bijections::split_at_first_boundary_hit(path, StaircaseA{s, t});
        if (!split) throw std::logic_error("path avoids the staircase");
        if (!(bijections::interchange_inverse(image, s, t, n, split->j, part) == path)) {
          throw std::logic_error("round trip did not return the original path");
        }
        std::cout << "round-trip ok\n";
      }
    } else if (a.map == "interchange-inv") {
      need_inputs(1);
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n"),
                      j = need(a.j, "j");
      const LatticePath path = parse_path(a.inputs[0]);
      const LatticePath image = bijections::interchange_inverse(path, s, t, n, j, part);
      std::cout << path_literal(image) << "\n";
      if (a.round_trip) {
        if (!(bijections::interchange(image, s, t, n, part) == path)) {
          throw std::logic_error("round trip did not return the original path");
        }
        std::cout << "round-trip ok\n";
      }
    } else if (a.map == "encode") {
      need_inputs(1);
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n"),
                      j = need(a.j, "j");
      const LatticePath path = parse_path(a.inputs[0]);
      const auto code = bijections::encode_alpha_beta(path, s, t, n, j, part);
      std::cout << bits_literal(code.alpha) << " " << bits_literal(code.beta) << "\n";
      if (a.round_trip) {
        if (!(bijections::decode_alpha_beta(code.alpha, code.beta, s, t, n, j, part) == path)) {
          throw std::logic_error("round trip did not return the original path");
        }
        std::cout << "round-trip ok\n";
      }
    } else if (a.map == "decode") {
      need_inputs(2);
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n"),
                      j = need(a.j, "j");
      const BinaryString alpha = parse_bits(a.inputs[0]);
      const BinaryString beta = parse_bits(a.inputs[1]);
      const LatticePath path = bijections::decode_alpha_beta(alpha, beta, s, t, n, j, part);
      std::cout << path_literal(path) << "\n";
      if (a.round_trip) {
        const auto code = bijections::encode_alpha_beta(path, s, t, n, j, part);
        if (!(code.alpha == alpha) || !(code.beta == beta)) {
          throw std::logic_error("round trip did not return the original code");
        }
        std::cout << "round-trip ok\n";
      }
    } else if (a.map == "raney-s1" || a.map == "raney-s2") {
      need_inputs(1);
      no_round_trip();
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n");
      const auto steps = bare_steps(a.inputs[0]);
      const auto res = a.map == "raney-s1"
                           ? bijections::raney_unique_shift_s1(steps, s, t, n)
                           : bijections::raney_unique_shift_s2(steps, s, t, n);
      std::cout << "shift " << res.shift << ", " << steps_str(res.steps) << "\n";
    } else if (a.map == "raney-bin") {
      need_inputs(1);
      no_round_trip();
      const long long n = need(a.n, "n"), s = need(a.s, "s");
      const auto res = bijections::raney_unique_shift_binary(parse_bits(a.inputs[0]), n, s);
      std::cout << "shift " << res.shift << ", " << bits_literal(res.bits) << "\n";
    } else if (a.map == "trisect") {
      need_inputs(1);
      no_round_trip();
      const long long k = need(a.k, "k");
      const auto tri = bijections::trisect(bare_steps(a.inputs[0]), k);
      if (!tri) {
        std::cout << "failure\n";
      } else {
        std::cout << "a=" << steps_str(tri->a) << " middle=" << steps_str(tri->middle)
                  << " b=" << steps_str(tri->b) << "\n";
      }
    } else if (a.map == "phi" || a.map == "phi-inv") {
      need_inputs(1);
      const long long k = need(a.k, "k");
      const LatticePath path = parse_path(a.inputs[0]);
      if (a.n) {
        const long long expected =
            2 * (k + 1) * *a.n + (a.map == "phi-inv" ? 1 : 0);
        if (static_cast<long long>(path.steps.size()) != expected) {
          throw UsageError("--n " + std::to_string(*a.n) + " expects a length-" +
                           std::to_string(expected) + " input");
        }
      }
      const LatticePath image = a.map == "phi" ? bijections::phi(path, k)
                                               : bijections::phi_inverse(path, k);
      std::cout << path_literal(image) << "\n";
      if (a.round_trip) {
        const LatticePath back = a.map == "phi" ? bijections::phi_inverse(image, k)
                                                : bijections::phi(image, k);
        if (!(back == path)) {
          throw std::logic_error("round trip did not return the original path");
        }
        std::cout << "round-trip ok\n";
      }
    } else if (a.map == "move-norths") {
      need_inputs(1);
      const long long s = need(a.s, "s"), t = need(a.t, "t"), n = need(a.n, "n");
      const LatticePath path = parse_path(a.inputs[0]);
      const LatticePath image = bijections::move_norths_to_end(path, s, t, n);
      std::cout << path_literal(image) << "\n";
      if (a.round_trip) {
        if (!(bijections::move_norths_to_front(image, s, t, n) == path)) {
          throw std::logic_error("round trip did not return the original path");
        }
        std::cout << "round-trip ok\n";
      }
    } else {
      throw UsageError("unknown map '" + a.map + "'");
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

// --------------------------------------------------------------- render --

struct RenderArgs {
  std::string path;
  std::optional<std::string> boundary;
  std::string format = "ascii";
  std::string out;
  std::optional<long long> k;
};

int run_render(const RenderArgs& a) {
  try {
    const LatticePath path = parse_path(a.path);
    render::RenderOptions options;
    if (a.boundary) options.boundary = parse_boundary(*a.boundary);
    options.k = a.k;
    const std::string figure = a.format == "svg" ? render::render_svg(path, options)
                                                 : render::render_ascii(path, options);
    if (a.out.empty()) {
      std::cout << figure;
    } else {
      std::ofstream file(a.out, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + a.out + "' for writing");
      file << figure;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

// --------------------------------------------------------------- search --

int run_search_cmd(const std::string& pattern, long long max_n, const std::string& tmpl) {
  try {
    const Boundary parsed = parse_boundary(pattern);
    GenericStaircase g;
    if (const auto* gs = std::get_if<GenericStaircase>(&parsed)) {
      g = *gs;
    } else if (const auto* sa = std::get_if<StaircaseA>(&parsed)) {
      g.origin = Point{0, sa->t};
      for (long long i = 0; i < sa->s; ++i) g.period.push_back(Step::East);
      for (long long i = 0; i < sa->t; ++i) g.period.push_back(Step::North);
    } else {
      throw UsageError("pattern must be '@x,y:STEPS' or 'A:s,t'");
    }
    std::cout << search::run_search(g, max_n, tmpl);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts, oracles and bijections for lattice paths avoiding periodic staircases"};
  app.require_subcommand(1);

  auto* count_cmd = app.add_subcommand("count", "evaluate a closed-form count");
  std::string count_formula;
  std::vector<std::string> count_params;
  count_cmd->add_option("--formula", count_formula,
                        "one of: classic, classic-nw, thm1-nw1, thm1-nw2, total1, "
                        "total2, binary, sum, exact-changes")
      ->required();
  count_cmd->add_option("params", count_params, "name=value parameters");

  auto* verify_cmd = app.add_subcommand("verify", "check formulas and bijections against the oracle");
  VerifyArgs va;
  verify_cmd->add_option("--suite", va.request.suite, "suite name")->required();
  verify_cmd->add_option("--max-s", va.request.grid.max_s, "s range upper bound");
  verify_cmd->add_option("--max-t", va.request.grid.max_t, "t range upper bound");
  verify_cmd->add_option("--max-n", va.request.grid.max_n, "n range upper bound");
  verify_cmd->add_option("--max-k", va.request.grid.max_k, "k range upper bound");
  long long pin_s = 0, pin_t = 0, pin_n = 0, pin_k = 0;
  auto* o_s = verify_cmd->add_option("--s", pin_s, "pin s");
  auto* o_t = verify_cmd->add_option("--t", pin_t, "pin t");
  auto* o_n = verify_cmd->add_option("--n", pin_n, "pin n");
  auto* o_k = verify_cmd->add_option("--k", pin_k, "pin k");
  verify_cmd->add_option("--include", va.includes,
                         "explicit grid point 's=..[,t=..],n=..'; repeatable");
  verify_cmd->add_option("--jobs", va.request.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", va.format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  verify_cmd->add_flag("--allow-known-gaps", va.allow_known_gaps,
                       "annotated expected discrepancies do not fail the run");

  auto* biject_cmd = app.add_subcommand("biject", "apply one of the bijections");
  BijectArgs ba;
  biject_cmd
      ->add_option("--map", ba.map,
                   "one of: interchange, interchange-inv, encode, decode, raney-s1, "
                   "raney-s2, raney-bin, trisect, phi, phi-inv, move-norths")
      ->required();
  long long b_s = 0, b_t = 0, b_n = 0, b_j = 0, b_k = 0;
  auto* bo_s = biject_cmd->add_option("--s", b_s, "boundary parameter s");
  auto* bo_t = biject_cmd->add_option("--t", b_t, "boundary parameter t");
  auto* bo_n = biject_cmd->add_option("--n", b_n, "grid index n");
  auto* bo_j = biject_cmd->add_option("--j", b_j, "residue class j");
  auto* bo_k = biject_cmd->add_option("--k", b_k, "line slope k");
  biject_cmd->add_option("--part", ba.part, "1 or 2");
  biject_cmd->add_flag("--round-trip", ba.round_trip, "apply the inverse and compare");
  biject_cmd->add_option("inputs", ba.inputs, "input literal(s)");

  auto* render_cmd = app.add_subcommand("render", "draw a path and boundary");
  RenderArgs ra;
  std::string render_boundary;
  long long render_k = 0;
  render_cmd->add_option("path", ra.path, "path literal; empty for grid only");
  auto* ro_b = render_cmd->add_option("--boundary", render_boundary,
                                      "'A:s,t', 'B:s', 'line:k' or '@x,y:STEPS'");
  render_cmd->add_option("--format", ra.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", ra.out, "write to a file instead of stdout");
  auto* ro_k = render_cmd->add_option("--k", render_k, "mark waypoint visits for this k");

  auto* search_cmd = app.add_subcommand("search", "fit avoider counts to the two-binomial shape");
  std::string pattern, tmpl = "total1";
  long long search_max_n = 5;
  search_cmd->add_option("--pattern", pattern, "'@x,y:STEPS' or 'A:s,t'")->required();
  search_cmd->add_option("--max-n", search_max_n, "test n = 1..max-n")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--formula-template", tmpl, "total1, total2 or both")
      ->check(CLI::IsMember({"total1", "total2", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (count_cmd->parsed()) return run_count(count_formula, count_params);
  if (verify_cmd->parsed()) {
    if (o_s->count()) va.request.grid.s = pin_s;
    if (o_t->count()) va.request.grid.t = pin_t;
    if (o_n->count()) va.request.grid.n = pin_n;
    if (o_k->count()) va.request.grid.k = pin_k;
    return run_verify_cmd(std::move(va));
  }
  if (biject_cmd->parsed()) {
    if (bo_s->count()) ba.s = b_s;
    if (bo_t->count()) ba.t = b_t;
    if (bo_n->count()) ba.n = b_n;
    if (bo_j->count()) ba.j = b_j;
    if (bo_k->count()) ba.k = b_k;
    return run_biject(ba);
  }
  if (render_cmd->parsed()) {
    if (ro_b->count()) ra.boundary = render_boundary;
    if (ro_k->count()) ra.k = render_k;
    return run_render(ra);
  }
  if (search_cmd->parsed()) return run_search_cmd(pattern, search_max_n, tmpl);
  return 2;
}
