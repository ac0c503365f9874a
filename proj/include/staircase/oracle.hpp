#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/binary_string.hpp"
#include "staircase/boundary.hpp"
#include "staircase/path.hpp"

// Ground truth by exhaustive enumeration and lattice DP. Everything here
// decides membership with the core predicates only; nothing calls the
// formula or bijection layers, so agreement between the two is evidence,
// not circularity.
namespace staircase::oracle {

// Bounds the number of search-node expansions (or candidate strings).
struct Guard {
  unsigned long long limit;
};

// 2^24 unless the STAIRCASE_GUARD environment variable overrides it.
unsigned long long default_guard_limit();
Guard default_guard();

struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Paths (0,0) -> (sn+1, tn) avoiding the staircase from (0,t).
struct S1Family { long long s, t, n; };
// Paths (1,0) -> (sn, tn-1) avoiding the staircase from (0,t).
struct S2Family { long long s, t, n; };
// Union over i in 0..t-1 of all paths (1,i) -> part-dependent endpoint,
// with no avoidance constraint.
struct TFamily { long long s, t, n; Part part; };
// Members of TFamily that do hit the staircase, first bad point in
// x-residue class j (1..s, with x = 0 mod s reported as class s).
struct UjFamily { long long s, t, n, j; Part part; };
// Length-2(k+1)n paths from the origin strictly right of x = ky.
struct FFamily { long long k, n; };
// Length-(2(k+1)n+1) paths from the origin avoiding the s = 2k staircase
// from (0,2) and touching x = ky+1 at some y > 0.
struct GFamily { long long k, n; };
// Fixed-length paths from the origin strictly right of x = ky.
struct LineAvoidersFamily { long long k, length; };
// Fixed-length paths from the origin avoiding the staircase from (0,2).
struct BAvoidersFamily { long long s, length; };

using PathFamily = std::variant<S1Family, S2Family, TFamily, UjFamily, FFamily,
                                GFamily, LineAvoidersFamily, BAvoidersFamily>;

// Length-((s+2)n+1) binary strings, admissible, with at most r changes.
struct AdmissibleBinaryFamily { long long n, s, r; };

// Members in lexicographic step order (East before North; for TFamily and
// UjFamily, ascending start height first). Throws GuardExceeded naming the
// family when the search exceeds the guard.
std::vector<LatticePath> enumerate(const PathFamily& family,
                                   const Guard& guard = default_guard());
// Members in lexicographic order (0 before 1).
std::vector<BinaryString> enumerate(const AdmissibleBinaryFamily& family,
                                    const Guard& guard = default_guard());

// Cardinality by lattice DP where the family is endpoint-constrained
// (S1/S2/T/Uj) or by a step-indexed layer DP otherwise; agrees with
// enumerate() wherever both run.
BigCount count(const PathFamily& family, const Guard& guard = default_guard());
BigCount count(const AdmissibleBinaryFamily& family,
               const Guard& guard = default_guard());

// Northwest-corner histogram over the family (S1 or S2 only), optionally
// after augment_plus. Values sum to count(family).
std::map<long long, BigCount> corner_histogram(const PathFamily& family,
                                               bool augmented,
                                               const Guard& guard = default_guard());

// Every arrangement of the given step counts, in lexicographic order,
// presented as a step vector. Used to sweep whole step-multiset universes.
void for_each_arrangement(long long easts, long long norths,
                          const std::function<void(const std::vector<Step>&)>& fn);

} // namespace staircase::oracle
