#include "staircase/binary_string.hpp"

#include <stdexcept>

namespace staircase {

BinaryString parse_bits(std::string_view literal) {
  BinaryString b;
  b.bits.reserve(literal.size());
  for (char c : literal) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary literal must contain only 0/1, got '" +
                                  std::string(1, c) + "'");
    }
    b.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return b;
}

std::string bits_literal(const BinaryString& b) {
  std::string out;
  out.reserve(b.bits.size());
  for (auto bit : b.bits) out.push_back(bit ? '1' : '0');
  return out;
}

std::size_t weight(const BinaryString& b) {
  std::size_t w = 0;
  for (auto bit : b.bits) w += bit;
  return w;
}

std::size_t change_count(const BinaryString& b) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < b.bits.size(); ++i) {
    if (b.bits[i] != b.bits[i - 1]) ++n;
  }
  return n;
}

LatticePath delta_decode(const BinaryString& b) {
  LatticePath path;
  path.start = Point{0, 0};
  path.steps.reserve(b.bits.size());
  std::uint8_t prev = 0;
  for (auto bit : b.bits) {
    path.steps.push_back(bit != prev ? Step::North : Step::East);
    prev = bit;
  }
  return path;
}

BinaryString delta_encode(const LatticePath& path) {
  if (!(path.start == Point{0, 0})) {
    throw std::invalid_argument("delta_encode requires a path starting at (0,0)");
  }
  BinaryString b;
  b.bits.reserve(path.steps.size());
  std::uint8_t cur = 0;
  for (Step s : path.steps) {
    if (s == Step::North) cur ^= 1;
    b.bits.push_back(cur);
  }
  return b;
}

bool is_admissible(const BinaryString& b, long long n, long long s) {
  if (n < 1 || s < 0) {
    throw std::invalid_argument("is_admissible requires n >= 1 and s >= 0");
  }
  const long long expected = (s + 2) * n + 1;
  if (static_cast<long long>(b.bits.size()) != expected) {
    throw std::invalid_argument("is_admissible: string length " +
                                std::to_string(b.bits.size()) + " but (s+2)n+1 = " +
                                std::to_string(expected));
  }
  long long j = 0;
  for (std::size_t i = 0; i + 1 < b.bits.size(); ++i) {
    if (b.bits[i] == 1 && b.bits[i + 1] == 0) {
      ++j;
      const long long pos = static_cast<long long>(i) + 1;  // 1-indexed
      if (pos < (s + 2) * j + 1) return false;
    }
  }
  return true;
}

} // namespace staircase
