#include <doctest.h>

#include <stdexcept>

#include "staircase/formulas.hpp"

using namespace staircase;
using namespace staircase::formulas;

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 3) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigCount{"118264581564861424"});
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
  CHECK_THROWS_AS(binomial(-2, -3), std::domain_error);
}

TEST_CASE("classic ballot-style counts") {
  CHECK(classic_count(1, 2, 1) == 2);
  CHECK(classic_count(1, 2, 2) == 2);
  CHECK(classic_nw_count(1, 2, 1, 2) == 1);
  CHECK(classic_nw_count(1, 2, 1, 1) == 1);
}

TEST_CASE("staircase corner refinements and totals") {
  CHECK(thm1_nw1(1, 1, 1, 1) == 1);
  CHECK(thm1_nw1(1, 1, 1, 2) == 0);
  CHECK(thm1_nw1(1, 1, 2, 2) == 1);
  CHECK(thm1_nw2(1, 1, 2, 1) == 1);
  CHECK(total1(1, 1, 1) == 1);
  CHECK(total1(1, 1, 2) == 2);
  CHECK(total1(2, 2, 2) == 28);
  CHECK(total2(2, 2, 1) == 2);
  CHECK(total2(1, 1, 2) == 1);

  SUBCASE("totals really are 1/n of a binomial") {
    for (long long s = 1; s <= 5; ++s) {
      for (long long t = 1; t <= 5; ++t) {
        for (long long n = 1; (s + t) * n <= 20; ++n) {
          CHECK(total1(s, t, n) * n == binomial(s * n + t * n, s * n + 1));
          CHECK(total2(s, t, n) * n == binomial(s * n + t * n - 2, t * n - 1));
        }
      }
    }
  }

  SUBCASE("corner refinements sum to the totals") {
    for (long long s = 1; s <= 3; ++s) {
      for (long long t = 1; t <= 3; ++t) {
        for (long long n = 1; (s + t) * n <= 10; ++n) {
          BigCount sum1 = 0;
          BigCount sum2 = 0;
          for (long long c = 1; c <= t * n + 1; ++c) {
            sum1 += thm1_nw1(s, t, n, c);
            if (s * n >= 2) sum2 += thm1_nw2(s, t, n, c);
          }
          CHECK(sum1 == total1(s, t, n));
          if (s * n >= 2) CHECK(sum2 == total2(s, t, n));
        }
      }
    }
  }

  SUBCASE("t = 1 staircase refinement is the classic refinement at a = kn, b = n") {
    for (long long k = 1; k <= 4; ++k) {
      for (long long n = 1; (k + 1) * n <= 10; ++n) {
        CHECK(total1(k, 1, n) == classic_count(k, k * n, n));
        for (long long c = 1; c <= n + 1; ++c) {
          CHECK(thm1_nw1(k, 1, n, c) == classic_nw_count(k, k * n, n, c));
        }
      }
    }
  }
}

TEST_CASE("admissible-string counts") {
  for (long long s = 0; s <= 8; ++s) {
    CHECK(binary_count(1, s, 0) == 2);
    CHECK(binary_count(1, s, 1) == s + 4);
    CHECK(binary_count(1, s, 2) == s + 4);
  }
  CHECK(binary_count(1, 4, 2) == 8);
  CHECK(binary_count(2, 2, 4) == 70);
  CHECK_THROWS_AS(binary_count(0, 2, 0), std::domain_error);
  CHECK_THROWS_AS(binary_count(1, -1, 0), std::domain_error);
  CHECK_THROWS_AS(binary_count(1, 2, 3), std::domain_error);
  CHECK_THROWS_AS(binary_count(1, 2, -1), std::domain_error);

  SUBCASE("s = 2 telescopes to a central binomial") {
    for (long long n = 1; n <= 10; ++n) {
      CHECK(binary_count(n, 2, 2 * n) == binomial(4 * n, 2 * n));
    }
  }

  SUBCASE("the r-bound is a cumulative count: top slice equals the exact-changes value") {
    for (long long n = 1; n <= 8; ++n) {
      for (long long s = 0; s <= 8; ++s) {
        const BigCount top = binary_count(n, s, 2 * n - 1) - binary_count(n, s, 2 * n - 2);
        CHECK(top == exact_changes_count(n, s));
      }
    }
  }

  SUBCASE("block recursion in n") {
    for (long long n = 2; n <= 6; ++n) {
      for (long long s = 0; s <= 6; ++s) {
        for (long long r = 0; r <= 2 * n - 2; ++r) {
          BigCount sum = 0;
          for (long long d = 0; d <= s + 2 && d <= r; ++d) {
            sum += binomial(s + 2, d) * binary_count(n - 1, s, r - d);
          }
          CHECK(binary_count(n, s, r) == sum);
        }
      }
    }
  }
}

TEST_CASE("exact-changes counts") {
  for (long long s = 0; s <= 8; ++s) CHECK(exact_changes_count(1, s) == s + 2);
  CHECK(exact_changes_count(2, 2) == 28);
  CHECK(exact_changes_count(2, 0) == 2);
}

TEST_CASE("line avoider counts") {
  CHECK(sum_count(1, 1) == 6);
  CHECK(sum_count(2, 1) == 8);
  CHECK(sum_count(1, 2) == 70);
  CHECK(sum_count(2, 2) == 196);
  for (long long n = 1; n <= 5; ++n) {
    BigCount pow4 = 1;
    for (long long i = 0; i < n; ++i) pow4 *= 4;
    CHECK(sum_count(0, n) == pow4);
  }
}
