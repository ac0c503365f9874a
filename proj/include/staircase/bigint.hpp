#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace staircase {

// Exact arbitrary-precision count. Every counting routine in the library
// returns this type; none of the closed forms fit in 64 bits for long.
using BigCount = boost::multiprecision::cpp_int;

} // namespace staircase
