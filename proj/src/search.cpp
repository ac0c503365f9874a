#include "staircase/search.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/formulas.hpp"
#include "staircase/path.hpp"

namespace staircase::search {
namespace {

using formulas::binomial;

// Paths start -> end with no visited point on the boundary.
BigCount avoider_count(Point start, Point end, const Boundary& boundary) {
  if (end.x < start.x || end.y < start.y) return 0;
  const std::size_t w = static_cast<std::size_t>(end.x - start.x);
  const std::size_t h = static_cast<std::size_t>(end.y - start.y);
  std::vector<std::vector<BigCount>> dp(w + 1, std::vector<BigCount>(h + 1));
  for (std::size_t ix = 0; ix <= w; ++ix) {
    for (std::size_t iy = 0; iy <= h; ++iy) {
      const Point p{start.x + static_cast<long long>(ix),
                    start.y + static_cast<long long>(iy)};
      if (boundary_contains(boundary, p)) continue;
      if (ix == 0 && iy == 0) {
        dp[ix][iy] = 1;
        continue;
      }
      if (ix > 0) dp[ix][iy] += dp[ix - 1][iy];
      if (iy > 0) dp[ix][iy] += dp[ix][iy - 1];
    }
  }
  return dp[w][h];
}

struct Fit {
  std::vector<BigCount> counts;  // counts[i] is the value at n = i+1
  bool fitted = false;
  BigCount tp, sp;
  std::optional<long long> falsified_at;
  BigCount falsified_expected;
};

Fit fit_template(const GenericStaircase& g, long long alpha, long long beta,
                 long long max_n, bool part1) {
  Fit f;
  const Boundary boundary{g};
  const auto col1 = [&](long long n) {
    return part1 ? binomial(alpha * n + beta * n, beta * n)
                 : binomial(alpha * n + beta * n - 2, beta * n - 1);
  };
  const auto col2 = [&](long long n) {
    return part1 ? binomial(alpha * n + beta * n, beta * n - 1)
                 : binomial(alpha * n + beta * n - 2, beta * n - 2);
  };
  for (long long n = 1; n <= max_n; ++n) {
    const Point start = part1 ? Point{0, 0} : Point{1, 0};
    const Point end = part1 ? Point{alpha * n + 1, beta * n}
                            : Point{alpha * n, beta * n - 1};
    f.counts.push_back(avoider_count(start, end, boundary));
  }
  if (max_n < 2) return f;

  // t'*col1(n) - s'*col2(n) = count(n) at n = 1,2, solved by Cramer and
  // accepted only when both quotients are exact.
  const BigCount a11 = col1(1), a12 = col2(1), a21 = col1(2), a22 = col2(2);
  const BigCount det = a12 * a21 - a11 * a22;
  if (det == 0) return f;
  const BigCount tnum = a12 * f.counts[1] - a22 * f.counts[0];
  const BigCount snum = a11 * f.counts[1] - a21 * f.counts[0];
  if (tnum % det != 0 || snum % det != 0) return f;
  f.tp = tnum / det;
  f.sp = snum / det;
  f.fitted = true;
  for (long long n = 3; n <= max_n; ++n) {
    const BigCount expected = f.tp * col1(n) - f.sp * col2(n);
    if (expected != f.counts[static_cast<std::size_t>(n - 1)]) {
      f.falsified_at = n;
      f.falsified_expected = expected;
      break;
    }
  }
  return f;
}

void describe(std::string& out, const char* name, const Fit& f, long long max_n) {
  out += std::string("template ") + name + "\n";
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    out += "  n=" + std::to_string(i + 1) + " count=" + f.counts[i].str() + "\n";
  }
  if (max_n < 2) {
    out += "  need max-n >= 2 to fit coefficients\n";
    return;
  }
  if (!f.fitted) {
    out += "  no integer (t',s') fits n=1,2\n";
    return;
  }
  if (f.falsified_at) {
    out += "  t'=" + f.tp.str() + " s'=" + f.sp.str() + " falsified at n=" +
           std::to_string(*f.falsified_at) + " (count=" +
           f.counts[static_cast<std::size_t>(*f.falsified_at - 1)].str() +
           " template=" + f.falsified_expected.str() + ")\n";
    return;
  }
  out += "  fit t'=" + f.tp.str() + " s'=" + f.sp.str() + " holds for n=1.." +
         std::to_string(max_n) + "\n";
}

}  // namespace

std::string run_search(const GenericStaircase& pattern, long long max_n,
                       const std::string& formula_template) {
  long long alpha = 0, beta = 0;
  for (Step s : pattern.period) (s == Step::East ? alpha : beta) += 1;
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("pattern period needs at least one E and one N");
  }
  if (max_n < 1) throw std::invalid_argument("max-n must be at least 1");
  const bool want1 = formula_template == "total1" || formula_template == "both";
  const bool want2 = formula_template == "total2" || formula_template == "both";
  if (!want1 && !want2) {
    throw std::invalid_argument("formula template must be total1, total2 or both");
  }

  std::string out;
  out += "pattern " + boundary_literal(Boundary{pattern}) + " alpha=" +
         std::to_string(alpha) + " beta=" + std::to_string(beta) + " max-n=" +
         std::to_string(max_n) + "\n";
  if (want1) describe(out, "total1", fit_template(pattern, alpha, beta, max_n, true), max_n);
  if (want2) describe(out, "total2", fit_template(pattern, alpha, beta, max_n, false), max_n);
  return out;
}

}  // namespace staircase::search
