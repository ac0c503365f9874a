#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "staircase/verify.hpp"

using namespace staircase;
using namespace staircase::verify;

namespace {

// Small enough to stay fast, big enough that every suite (the block
// recursion needs n >= 2) has at least one grid point.
GridOptions tiny_grid() {
  GridOptions g;
  g.max_s = 1;
  g.max_t = 1;
  g.max_n = 2;
  g.max_k = 1;
  return g;
}

} // namespace

TEST_CASE("the suite catalog is fixed") {
  const auto& names = known_suites();
  CHECK(names.size() == 15);
  CHECK(std::find(names.begin(), names.end(), "cor5") != names.end());
  CHECK(std::find(names.begin(), names.end(), "thm1-part2") != names.end());
  CHECK(std::find(names.begin(), names.end(), "delta-equivalence") != names.end());

  VerifyRequest bad;
  bad.suite = "nonsense";
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
}

TEST_CASE("every suite runs clean on a tiny grid") {
  for (const auto& name : known_suites()) {
    CAPTURE(name);
    VerifyRequest req;
    req.suite = name;
    req.grid = tiny_grid();
    const auto reports = run_verify(req);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(to_text_line(r));
      CHECK((r.match || is_known_gap(r)));
    }
  }
}

TEST_CASE("cor5 reports the frozen central-binomial values at s = 2") {
  VerifyRequest req;
  req.suite = "cor5";
  req.grid.max_n = 2;
  const auto reports = run_verify(req);
  CHECK(reports.size() == 8);  // s in 0..3, n in 1..2
  for (const auto& r : reports) {
    CHECK(r.match);
    if (r.params == std::vector<std::pair<std::string, long long>>{{"n", 1}, {"s", 2}}) {
      CHECK(*r.formula_value == 6);
    }
    if (r.params == std::vector<std::pair<std::string, long long>>{{"n", 2}, {"s", 2}}) {
      CHECK(*r.formula_value == 70);
    }
  }
}

TEST_CASE("pinning grid values narrows the sweep") {
  VerifyRequest req;
  req.suite = "thm3";
  req.grid.s = 1;
  req.grid.n = 2;
  const auto reports = run_verify(req);
  CHECK_FALSE(reports.empty());
  for (const auto& r : reports) {
    CHECK(r.params[0] == std::pair<std::string, long long>{"n", 2});
    CHECK(r.params[1] == std::pair<std::string, long long>{"s", 1});
    CHECK(r.match);
  }
}

TEST_CASE("include triples replace the grid product") {
  VerifyRequest req;
  req.suite = "thm1-part2";
  req.grid.include = {{1, 1, 1}};
  const auto reports = run_verify(req);
  REQUIRE(reports.size() == 1);
  const auto& r = reports.front();
  CHECK_FALSE(r.match);
  CHECK(is_known_gap(r));
  REQUIRE(r.formula_value.has_value());
  REQUIRE(r.oracle_value.has_value());
  CHECK(*r.formula_value == 1);
  CHECK(*r.oracle_value == 0);
}

TEST_CASE("reports are independent of the job count") {
  VerifyRequest req;
  req.suite = "raney-binary";
  req.grid.max_s = 2;
  req.grid.max_n = 2;
  req.jobs = 1;
  const auto one = run_verify(req);
  req.jobs = 4;
  const auto four = run_verify(req);
  CHECK(one == four);
  CHECK_FALSE(one.empty());
}

TEST_CASE("a tight guard propagates as GuardExceeded") {
  // delta-equivalence sweeps all 2^L strings, so a one-node guard trips
  // before any point is checked.
  VerifyRequest req;
  req.suite = "delta-equivalence";
  req.grid = tiny_grid();
  req.guard = oracle::Guard{1};
  CHECK_THROWS_AS(run_verify(req), oracle::GuardExceeded);
}
