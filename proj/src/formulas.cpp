#include "staircase/formulas.hpp"

#include <stdexcept>
#include <string>

namespace staircase::formulas {

namespace {

[[noreturn]] void precondition_error(const std::string& what) {
  throw std::domain_error(what);
}

} // namespace

BigCount binomial(long long n, long long k) {
  if (n < 0) precondition_error("binomial requires n >= 0, got n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

BigCount classic_count(long long k, long long a, long long b) {
  if (k < 1 || b < 0 || a < k * b) {
    precondition_error("classic requires k >= 1, b >= 0, a >= k*b");
  }
  return binomial(a + b, b) - k * binomial(a + b, b - 1);
}

BigCount classic_nw_count(long long k, long long a, long long b, long long c) {
  if (k < 1 || b < 0 || a < k * b || c < 1) {
    precondition_error("classic-nw requires k >= 1, b >= 0, a >= k*b, c >= 1");
  }
  return binomial(a, c - 1) * binomial(b, c - 1) -
         k * binomial(a - 1, c - 2) * binomial(b + 1, c);
}

BigCount thm1_nw1(long long s, long long t, long long n, long long c) {
  if (s < 1 || t < 1 || n < 1 || c < 1) {
    precondition_error("thm1-nw1 requires s, t, n, c >= 1");
  }
  return t * binomial(s * n, c - 1) * binomial(t * n, c - 1) -
         s * binomial(s * n - 1, c - 2) * binomial(t * n + 1, c);
}

BigCount thm1_nw2(long long s, long long t, long long n, long long c) {
  if (s < 1 || t < 1 || n < 1 || c < 1) {
    precondition_error("thm1-nw2 requires s, t, n, c >= 1");
  }
  if (s * n < 2) {
    precondition_error("thm1-nw2 requires s*n >= 2 (the s*n = 1 case has no "
                       "consistent value under the binomial convention)");
  }
  return t * binomial(s * n - 1, c - 1) * binomial(t * n - 1, c - 1) -
         s * binomial(s * n - 2, c - 2) * binomial(t * n, c);
}

BigCount total1(long long s, long long t, long long n) {
  if (s < 1 || t < 1 || n < 1) precondition_error("total1 requires s, t, n >= 1");
  return t * binomial(s * n + t * n, t * n) - s * binomial(s * n + t * n, t * n - 1);
}

BigCount total2(long long s, long long t, long long n) {
  if (s < 1 || t < 1 || n < 1) precondition_error("total2 requires s, t, n >= 1");
  return t * binomial(s * n + t * n - 2, t * n - 1) -
         s * binomial(s * n + t * n - 2, t * n - 2);
}

BigCount binary_count(long long n, long long s, long long r) {
  if (n < 1 || s < 0 || r < 0 || r > 2 * n) {
    precondition_error("binary requires n >= 1, s >= 0, 0 <= r <= 2n");
  }
  const long long top = (s + 2) * n - 1;
  BigCount tail = 0;
  for (long long i = 0; i < r; ++i) tail += binomial(top, i);
  return 2 * binomial(top, r) - (s - 2) * tail;
}

BigCount sum_count(long long k, long long n) {
  if (k < 0 || n < 1) precondition_error("sum requires k >= 0, n >= 1");
  const long long top = 2 * (k + 1) * n;
  BigCount tail = 0;
  for (long long i = 0; i < 2 * n; ++i) tail += binomial(top, i);
  return binomial(top, 2 * n) - (k - 1) * tail;
}

BigCount exact_changes_count(long long n, long long s) {
  if (n < 1 || s < 0) precondition_error("exact-changes requires n >= 1, s >= 0");
  const BigCount numerator = binomial((s + 2) * n, 2 * n - 1);
  if (numerator % n != 0) {
    throw std::logic_error("exact-changes: C((s+2)n, 2n-1) not divisible by n");
  }
  return numerator / n;
}

} // namespace staircase::formulas
