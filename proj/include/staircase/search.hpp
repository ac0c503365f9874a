#pragma once

#include <string>

#include "staircase/boundary.hpp"

// Prospecting for boundaries whose avoider counts follow the two-binomial
// shape. For a repeating pattern with alpha east and beta north steps per
// period, counts paths avoiding it to the analogous endpoints and fits
//   template "total1": t'*C(an+bn, bn)     - s'*C(an+bn, bn-1),
//                      endpoints (0,0) -> (alpha*n+1, beta*n)
//   template "total2": t'*C(an+bn-2, bn-1) - s'*C(an+bn-2, bn-2),
//                      endpoints (1,0) -> (alpha*n, beta*n-1)
// solving for integers t',s' from n = 1,2 and checking the rest of the
// range. Reports fits and falsifications; claims nothing beyond max_n.
namespace staircase::search {

// formula_template is "total1", "total2" or "both". The period must
// contain at least one east and one north step; max_n >= 1.
std::string run_search(const GenericStaircase& pattern, long long max_n,
                       const std::string& formula_template);

}  // namespace staircase::search
