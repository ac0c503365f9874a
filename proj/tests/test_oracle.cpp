#include <doctest.h>

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "staircase/formulas.hpp"
#include "staircase/oracle.hpp"

using namespace staircase;
using namespace staircase::oracle;

namespace {

std::vector<std::string> literals(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(path_literal(p));
  return out;
}

} // namespace

TEST_CASE("guard limit comes from the environment when set") {
  unsetenv("STAIRCASE_GUARD");
  CHECK(default_guard_limit() == (1ull << 24));
  setenv("STAIRCASE_GUARD", "12345", 1);
  CHECK(default_guard_limit() == 12345);
  unsetenv("STAIRCASE_GUARD");
  CHECK(default_guard_limit() == (1ull << 24));
}

TEST_CASE("small families enumerate to their known members") {
  CHECK(literals(enumerate(S1Family{1, 1, 1})) == std::vector<std::string>{"EEN"});
  CHECK(literals(enumerate(S1Family{1, 1, 2})) ==
        std::vector<std::string>{"EEENN", "EENEN"});
  CHECK(literals(enumerate(FFamily{1, 1})) ==
        std::vector<std::string>{"EEEE", "EEEN", "EENE"});
  CHECK(literals(enumerate(GFamily{1, 1})) ==
        std::vector<std::string>{"EENEE", "ENEEE", "NEEEE"});
  CHECK(literals(enumerate(S2Family{2, 2, 1})) ==
        std::vector<std::string>{"@1,0:EN", "@1,0:NE"});
}

TEST_CASE("admissible string enumeration") {
  const auto strings = enumerate(AdmissibleBinaryFamily{1, 2, 2});
  std::vector<std::string> got;
  for (const auto& b : strings) got.push_back(bits_literal(b));
  CHECK(got == std::vector<std::string>{"00000", "00001", "00011", "00111",
                                        "01111", "11111"});
  CHECK(count(AdmissibleBinaryFamily{1, 2, 2}) == 6);
  CHECK(count(AdmissibleBinaryFamily{1, 2, 0}) == 2);
}

TEST_CASE("counts agree with enumeration sizes") {
  const Guard g = default_guard();
  for (long long s = 1; s <= 2; ++s) {
    for (long long t = 1; t <= 2; ++t) {
      for (long long n = 1; n <= 2; ++n) {
        CHECK(count(S1Family{s, t, n}, g) == enumerate(S1Family{s, t, n}, g).size());
        CHECK(count(S2Family{s, t, n}, g) == enumerate(S2Family{s, t, n}, g).size());
        for (Part part : {Part::One, Part::Two}) {
          CHECK(count(TFamily{s, t, n, part}, g) ==
                enumerate(TFamily{s, t, n, part}, g).size());
          for (long long j = 1; j <= s; ++j) {
            CHECK(count(UjFamily{s, t, n, j, part}, g) ==
                  enumerate(UjFamily{s, t, n, j, part}, g).size());
          }
        }
      }
    }
  }
  for (long long k = 1; k <= 2; ++k) {
    CHECK(count(FFamily{k, 1}) == enumerate(FFamily{k, 1}).size());
    CHECK(count(GFamily{k, 1}) == enumerate(GFamily{k, 1}).size());
  }
  CHECK(count(LineAvoidersFamily{2, 7}) == enumerate(LineAvoidersFamily{2, 7}).size());
  CHECK(count(BAvoidersFamily{2, 7}) == enumerate(BAvoidersFamily{2, 7}).size());
  CHECK(count(AdmissibleBinaryFamily{2, 1, 4}) ==
        enumerate(AdmissibleBinaryFamily{2, 1, 4}).size());
}

TEST_CASE("line avoiders frozen count") {
  CHECK(count(LineAvoidersFamily{2, 7}) == 8);
  CHECK(count(BAvoidersFamily{0, 3}) == 4);
}

TEST_CASE("the unconstrained family splits into avoiders and the bad classes") {
  for (long long s = 1; s <= 2; ++s) {
    for (long long t = 1; t <= 2; ++t) {
      for (long long n = 1; n <= 2; ++n) {
        for (Part part : {Part::One, Part::Two}) {
          BigCount bad = 0;
          for (long long j = 1; j <= s; ++j) bad += count(UjFamily{s, t, n, j, part});
          const BigCount good =
              part == Part::One ? count(S1Family{s, t, n}) : count(S2Family{s, t, n});
          CHECK(count(TFamily{s, t, n, part}) == good + bad);
        }
      }
    }
  }
}

TEST_CASE("bad-class sizes match the closed form") {
  for (long long s = 1; s <= 3; ++s) {
    for (long long t = 1; t <= 3; ++t) {
      for (long long n = 1; (s + t) * n <= 8; ++n) {
        for (long long j = 1; j <= s; ++j) {
          CHECK(count(UjFamily{s, t, n, j, Part::One}) ==
                formulas::binomial(s * n + t * n, t * n - 1));
          CHECK(count(UjFamily{s, t, n, j, Part::Two}) ==
                formulas::binomial(s * n + t * n - 2, t * n - 2));
        }
      }
    }
  }
}

TEST_CASE("corner histograms") {
  const auto plain = corner_histogram(S1Family{1, 1, 2}, false);
  REQUIRE(plain.size() == 2);
  CHECK(plain.at(0) == 1);
  CHECK(plain.at(1) == 1);

  const auto augmented = corner_histogram(S1Family{1, 1, 2}, true);
  REQUIRE(augmented.size() == 2);
  CHECK(augmented.at(1) == 1);
  CHECK(augmented.at(2) == 1);

  const auto single = corner_histogram(S1Family{1, 1, 1}, true);
  REQUIRE(single.size() == 1);
  CHECK(single.at(1) == 1);

  SUBCASE("histogram masses sum to the family count") {
    for (long long s = 1; s <= 2; ++s) {
      for (long long t = 1; t <= 2; ++t) {
        BigCount mass = 0;
        for (const auto& [c, v] : corner_histogram(S2Family{s, t, 2}, true)) mass += v;
        CHECK(mass == count(S2Family{s, t, 2}));
      }
    }
  }
}

TEST_CASE("arrangement sweep is lexicographic and complete") {
  std::vector<std::string> got;
  for_each_arrangement(2, 1, [&](const std::vector<Step>& steps) {
    std::string s;
    for (Step st : steps) s += st == Step::East ? 'E' : 'N';
    got.push_back(s);
  });
  CHECK(got == std::vector<std::string>{"EEN", "ENE", "NEE"});

  int count3 = 0;
  for_each_arrangement(0, 0, [&](const std::vector<Step>& steps) {
    CHECK(steps.empty());
    ++count3;
  });
  CHECK(count3 == 1);
}

TEST_CASE("the guard stops oversized searches and names the family") {
  CHECK_THROWS_AS(enumerate(S1Family{3, 3, 3}, Guard{10}), GuardExceeded);
  try {
    enumerate(AdmissibleBinaryFamily{3, 3, 6}, Guard{5});
    FAIL("expected GuardExceeded");
  } catch (const GuardExceeded& e) {
    CHECK(std::string(e.what()).find("AdmissibleBinary") != std::string::npos);
  }
}
