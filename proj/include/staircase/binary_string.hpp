#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/path.hpp"

namespace staircase {

struct BinaryString {
  std::vector<std::uint8_t> bits{};  // each 0 or 1
  friend bool operator==(const BinaryString&, const BinaryString&) = default;
};

BinaryString parse_bits(std::string_view literal);
std::string bits_literal(const BinaryString& b);

// Number of 1 bits.
std::size_t weight(const BinaryString& b);

// Adjacent unequal pairs: occurrences of 10 plus occurrences of 01.
std::size_t change_count(const BinaryString& b);

// With the convention b_0 = 0, step i of the path is North when
// b_{i-1} != b_i and East otherwise. The path starts at (0,0) and has the
// same length as the string.
LatticePath delta_decode(const BinaryString& b);

// Exact inverse (prefix parity of the north/east pattern). The path must
// start at (0,0).
BinaryString delta_encode(const LatticePath& path);

// A string of length (s+2)n+1 is admissible when for every j >= 1 its jth
// occurrence of the factor 10 starts at 1-indexed position >= (s+2)j+1.
// Throws std::invalid_argument when the length is not (s+2)n+1.
bool is_admissible(const BinaryString& b, long long n, long long s);

} // namespace staircase
