#include <doctest.h>

#include <stdexcept>

#include "staircase/path.hpp"

using namespace staircase;

TEST_CASE("make_path and endpoint arithmetic") {
  const LatticePath p = make_path({1, 2}, "EEN");
  CHECK(p.start == Point{1, 2});
  CHECK(p.steps.size() == 3);
  CHECK(path_end(p) == Point{3, 3});

  const auto pts = visited_points(p);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Point{1, 2});
  CHECK(pts[1] == Point{2, 2});
  CHECK(pts[2] == Point{3, 2});
  CHECK(pts[3] == Point{3, 3});
}

TEST_CASE("path literals") {
  SUBCASE("bare run starts at the origin") {
    const LatticePath p = parse_path("EEN");
    CHECK(p.start == Point{0, 0});
    CHECK(path_literal(p) == "EEN");
  }
  SUBCASE("anchored form") {
    const LatticePath p = parse_path("@1,3:ENN");
    CHECK(p.start == Point{1, 3});
    CHECK(path_end(p) == Point{2, 5});
    CHECK(path_literal(p) == "@1,3:ENN");
  }
  SUBCASE("empty paths") {
    CHECK(parse_path("") == LatticePath{});
    const LatticePath at = parse_path("@2,5:");
    CHECK(at.start == Point{2, 5});
    CHECK(at.steps.empty());
    CHECK(parse_path(path_literal(at)) == at);
  }
  SUBCASE("negative coordinates round-trip") {
    const LatticePath p = parse_path("@-1,0:NEN");
    CHECK(p.start == Point{-1, 0});
    CHECK(parse_path(path_literal(p)) == p);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_path("EXN"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("@1:EN"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("@1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("@a,b:EN"), std::invalid_argument);
  }
}

TEST_CASE("corner counting") {
  CHECK(corner_count(parse_path("EENEE"), Corner::NorthWest) == 1);
  CHECK(corner_count(parse_path("EENEE"), Corner::SouthEast) == 1);
  CHECK(corner_count(parse_path("EEENN"), Corner::NorthWest) == 0);
  CHECK(corner_count(parse_path("NENE"), Corner::NorthWest) == 2);
  CHECK(corner_count(parse_path("NENE"), Corner::SouthEast) == 1);
  // Endpoints are not corners: a trailing N->E pair is interior, a final N is not.
  CHECK(corner_count(parse_path("EN"), Corner::NorthWest) == 0);
  CHECK(corner_count(parse_path("EN"), Corner::SouthEast) == 1);
  CHECK(corner_count(LatticePath{}, Corner::NorthWest) == 0);
}

TEST_CASE("augment_plus wraps the path in norths") {
  const LatticePath p = parse_path("EEN");
  const LatticePath a = augment_plus(p);
  CHECK(a.start == Point{0, -1});
  CHECK(a.steps.size() == p.steps.size() + 2);
  CHECK(a.steps.front() == Step::North);
  CHECK(a.steps.back() == Step::North);
  // Interior points are untouched.
  CHECK(visited_points(a)[1] == p.start);

  SUBCASE("augmented corner balance: starts and ends north, so NW = SE") {
    for (const char* lit : {"E", "N", "EEN", "NENE", "EENEE", "ENENEN", "NNEE"}) {
      const LatticePath aug = augment_plus(parse_path(lit));
      CHECK(corner_count(aug, Corner::NorthWest) == corner_count(aug, Corner::SouthEast));
    }
  }
}

TEST_CASE("potential relative to x = ky") {
  CHECK(potential(Point{3, 1}, 2) == 1);
  CHECK(potential(Point{0, 0}, 5) == 0);
  CHECK(potential(Point{2, 2}, 1) == 0);
  CHECK(potential(Point{1, 2}, 3) == -5);
}
