#pragma once

#include "staircase/bigint.hpp"

namespace staircase::formulas {

// C(n,k) with the convention: 0 when k < 0 or k > n; n < 0 is rejected
// (std::domain_error) rather than given a value.
BigCount binomial(long long n, long long k);

// Paths (0,0) -> (a+1,b) strictly right of x = ky except at the origin:
// C(a+b,b) - k*C(a+b,b-1). Requires k >= 1, b >= 0, a >= k*b.
BigCount classic_count(long long k, long long a, long long b);

// Refinement of classic_count by northwest corners (c-1 of them):
// C(a,c-1)*C(b,c-1) - k*C(a-1,c-2)*C(b+1,c). Requires c >= 1 as well.
BigCount classic_nw_count(long long k, long long a, long long b, long long c);

// Augmented avoiders of the staircase from (0,t) with c northwest corners.
// Part one: t*C(sn,c-1)*C(tn,c-1) - s*C(sn-1,c-2)*C(tn+1,c).
BigCount thm1_nw1(long long s, long long t, long long n, long long c);

// Part two: t*C(sn-1,c-1)*C(tn-1,c-1) - s*C(sn-2,c-2)*C(tn,c).
// Requires sn >= 2 (the degenerate sn = 1 case has no consistent value
// under the binomial convention; see verify's known-gap reporting).
BigCount thm1_nw2(long long s, long long t, long long n, long long c);

// Totals over all corner counts.
// total1 = t*C(sn+tn,tn) - s*C(sn+tn,tn-1) = (1/n)*C(sn+tn,sn+1).
BigCount total1(long long s, long long t, long long n);
// total2 = t*C(sn+tn-2,tn-1) - s*C(sn+tn-2,tn-2) = (1/n)*C(sn+tn-2,tn-1).
BigCount total2(long long s, long long t, long long n);

// Admissible binary strings of length (s+2)n+1 with at most r changes:
// 2*C((s+2)n-1,r) - (s-2)*sum_{i<r} C((s+2)n-1,i).
// Requires n >= 1, s >= 0, 0 <= r <= 2n.
BigCount binary_count(long long n, long long s, long long r);

// Length-(2(k+1)n+1) paths avoiding B_{2k} (equivalently, strictly right
// of x = ky): C(2(k+1)n,2n) - (k-1)*sum_{i<2n} C(2(k+1)n,i).
BigCount sum_count(long long k, long long n);

// Admissible strings with exactly 2n-1 changes: (1/n)*C((s+2)n,2n-1).
// Divisibility is asserted; failure would be a logic error.
BigCount exact_changes_count(long long n, long long s);

} // namespace staircase::formulas
