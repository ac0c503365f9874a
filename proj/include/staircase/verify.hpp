#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "staircase/oracle.hpp"
#include "staircase/report.hpp"

// Formula-vs-oracle and bijection round-trip suites over parameter grids.
// Each suite walks its grid in a fixed order and emits one report per grid
// point; mismatches are recorded in the report, never thrown, so a run
// always yields the full table.
namespace staircase::verify {

// Grid bounds. A pinned value replaces its range; `include` (explicit
// (s,t,n) triples) replaces the whole product for the suites gridded on
// s,t,n, and contributes its s and n components to the suites gridded on
// s,n. Suites gridded on k,n ignore `include`.
struct GridOptions {
  long long max_s = 3;
  long long max_t = 3;
  long long max_n = 3;
  long long max_k = 2;
  std::optional<long long> s;
  std::optional<long long> t;
  std::optional<long long> n;
  std::optional<long long> k;
  std::vector<std::array<long long, 3>> include;
};

struct VerifyRequest {
  std::string suite;
  GridOptions grid;
  int jobs = 1;
  oracle::Guard guard = oracle::default_guard();
};

const std::vector<std::string>& known_suites();

// Runs one suite. Grid points are independent and may be distributed over
// `jobs` worker threads; reports come back in grid order regardless, so the
// output is byte-identical for any job count. Throws std::invalid_argument
// for an unknown suite and propagates oracle::GuardExceeded.
std::vector<VerificationReport> run_verify(const VerifyRequest& request);

}  // namespace staircase::verify
