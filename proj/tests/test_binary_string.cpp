#include <doctest.h>

#include <cstddef>
#include <stdexcept>

#include "staircase/binary_string.hpp"
#include "staircase/boundary.hpp"

using namespace staircase;

TEST_CASE("bit literals") {
  const BinaryString b = parse_bits("0110");
  CHECK(b.bits.size() == 4);
  CHECK(bits_literal(b) == "0110");
  CHECK(parse_bits("").bits.empty());
  CHECK_THROWS_AS(parse_bits("012"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bits("0 1"), std::invalid_argument);
}

TEST_CASE("weight and change count") {
  CHECK(weight(parse_bits("0110")) == 2);
  CHECK(weight(parse_bits("0000")) == 0);
  CHECK(change_count(parse_bits("00000")) == 0);
  CHECK(change_count(parse_bits("11111")) == 0);
  CHECK(change_count(parse_bits("0011")) == 1);
  CHECK(change_count(parse_bits("0101")) == 3);
  CHECK(change_count(parse_bits("110")) == 1);
  CHECK(change_count(parse_bits("1")) == 0);
  CHECK(change_count(parse_bits("")) == 0);
}

TEST_CASE("delta decoding reads changes against a leading virtual 0") {
  CHECK(delta_decode(parse_bits("0")) == parse_path("E"));
  CHECK(delta_decode(parse_bits("1")) == parse_path("N"));
  CHECK(delta_decode(parse_bits("01")) == parse_path("EN"));
  CHECK(delta_decode(parse_bits("11")) == parse_path("NE"));
  CHECK(delta_decode(parse_bits("0011011")) == parse_path("EENENNE"));
  CHECK(delta_decode(parse_bits("")) == LatticePath{});
}

TEST_CASE("delta round trip on every short string") {
  for (std::size_t len = 0; len <= 12; ++len) {
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
      BinaryString b;
      for (std::size_t i = 0; i < len; ++i) b.bits.push_back((mask >> i) & 1u);
      CHECK(delta_encode(delta_decode(b)) == b);
    }
  }
  CHECK_THROWS_AS(delta_encode(parse_path("@1,0:EN")), std::invalid_argument);
}

TEST_CASE("admissibility pins the falls to late positions") {
  // n=1, s=2: length 5, the first 10 would need to start at position 5, so
  // admissible means no 10 factor at all.
  CHECK(is_admissible(parse_bits("00000"), 1, 2));
  CHECK(is_admissible(parse_bits("00111"), 1, 2));
  CHECK(is_admissible(parse_bits("11111"), 1, 2));
  CHECK_FALSE(is_admissible(parse_bits("01010"), 1, 2));
  CHECK_FALSE(is_admissible(parse_bits("10000"), 1, 2));

  // n=2, s=1: length 7, first fall at >= 4, second at >= 7 (impossible).
  CHECK(is_admissible(parse_bits("0011011"), 2, 1));
  CHECK_FALSE(is_admissible(parse_bits("0110011"), 2, 1));
  CHECK_FALSE(is_admissible(parse_bits("0011010"), 2, 1));

  CHECK_THROWS_AS(is_admissible(parse_bits("0000"), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible(parse_bits("00000"), 0, 2), std::invalid_argument);
}

TEST_CASE("admissible iff the delta path clears the staircase from (0,2)") {
  for (long long s = 0; s <= 3; ++s) {
    for (long long n = 1; (s + 2) * n + 1 <= 13; ++n) {
      const long long len = (s + 2) * n + 1;
      const Boundary b{StaircaseB{s}};
      for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
        BinaryString bits;
        for (long long i = 0; i < len; ++i) bits.bits.push_back((mask >> i) & 1u);
        CHECK(is_admissible(bits, n, s) == avoids(delta_decode(bits), b));
      }
    }
  }
}
