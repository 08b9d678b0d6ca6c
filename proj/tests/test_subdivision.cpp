#include <set>

#include "doctest.h"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/structure.hpp"
#include "mediankit/subdivision.hpp"
#include "oracle.hpp"

using namespace mediankit;

namespace {

Pocset edge() { return actionFixture("EDGE").action.pocset(); }

}  // namespace

TEST_CASE("one wall subdivides into a path of three points") {
  auto S = subdivide(edge());
  CHECK(S.child.wallCount() == 2);
  for (const auto& w : S.child.walls()) CHECK(w.weight == Rational(1, 2));
  auto pts = points(S.child);
  CHECK(pts.size() == 3);
  CHECK(validate(S.child).ok());
}

TEST_CASE("the subdivided square is the 3 x 3 grid") {
  const Pocset P = actionFixture("SQUARE").action.pocset();
  auto S = subdivide(P);
  CHECK(points(S.child).size() == 9);
  CHECK(rank(S.child) == 2);
  CHECK(maxAtom(S.child) == Rational(1, 2));
  CHECK(points(S.child).size() == oracle::points(S.child).size());
}

TEST_CASE("projection and embedding") {
  for (const auto& name : {"SQUARE", "PATH3", "TRIPOD", "GRID"}) {
    const Pocset P = actionFixture(name).action.pocset();
    auto S = subdivide(P);
    for (std::size_t a = 0; a < P.size(); ++a) {
      CHECK(S.projection[S.minus[a]] == a);
      CHECK(S.projection[S.plus[a]] == a);
    }
    auto pts = points(P);
    for (const auto& x : pts) {
      Point e = S.embed(x);
      CHECK(isUltrafilter(S.child, e));
      CHECK_FALSE(isNewPoint(S, e));
      for (const auto& y : pts) CHECK(distance(S.child, e, S.embed(y)) == distance(P, x, y));
    }
  }
}

TEST_CASE("lifted wall inversion has no inversion") {
  const Pocset P = edge();
  auto S = subdivide(P);
  Automorphism g{"swap", {P.star(0), 0}};
  REQUIRE(isAutomorphism(P, g.map));
  auto gl = lift(S, g);
  CHECK(isAutomorphism(S.child, gl.map));
  for (std::size_t j = 0; j < S.child.size(); ++j) CHECK(gl.map[j] != S.child.star(j));
  // the midpoint is fixed
  for (const auto& x : points(S.child))
    if (isNewPoint(S, x)) CHECK(applyToPoint(gl, x) == x);
}

TEST_CASE("lifts commute with composition") {
  const Pocset P = actionFixture("SQUARE").action.pocset();
  auto S = subdivide(P);
  auto G = automorphisms(P);
  for (const auto& g : G)
    for (const auto& h : G) CHECK(sameMap(lift(S, compose(g, h)), compose(lift(S, g), lift(S, h))));
}

TEST_CASE("cubes at new points") {
  {
    auto S = subdivide(edge());
    std::size_t newPoints = 0;
    for (const auto& x : points(S.child)) {
      if (!isNewPoint(S, x)) {
        CHECK_THROWS_AS(cubeAt(S, x), Error);
        continue;
      }
      ++newPoints;
      auto c = cubeAt(S, x);
      CHECK(c.k == 1);
      CHECK(c.cube.size() == 3);
    }
    CHECK(newPoints == 1);
  }
  const Pocset P = actionFixture("SQUARE").action.pocset();
  auto S = subdivide(P);
  std::multiset<std::size_t> ks;
  for (const auto& x : points(S.child)) {
    if (!isNewPoint(S, x)) continue;
    auto c = cubeAt(S, x);
    ks.insert(c.k);
    CHECK(c.corners.size() == (std::size_t{1} << c.k));
    for (const auto& v : c.cube) {
      bool zero = true;
      for (int t : v.coords) zero = zero && t == 0;
      if (zero) CHECK(v.point == x);
    }
    if (c.k == 2) {
      std::set<Point> corners;
      for (const auto& v : c.corners) corners.insert(v.point);
      auto orig = points(P);
      CHECK(corners == std::set<Point>(orig.begin(), orig.end()));
    }
  }
  CHECK(ks == std::multiset<std::size_t>{1, 1, 1, 1, 2});
}

TEST_CASE("towers") {
  auto T0 = tower(edge(), 0);
  REQUIRE(T0.size() == 1);
  CHECK(points(T0[0].child).size() == 2);
  auto T = tower(edge(), 2);
  REQUIRE(T.size() == 3);
  CHECK(points(T.back().child).size() == 5);
  for (const auto& w : T.back().child.walls()) CHECK(w.weight == Rational(1, 4));
  CHECK(maxAtom(T.back().child) == Rational(1, 4));
  Point x = points(edge())[0], y = points(edge())[1];
  CHECK(distance(T.back().child, embedInto(T, 2, x), embedInto(T, 2, y)) == Rational(1));
}

TEST_CASE("tower cap") {
  const Pocset P = actionFixture("LINE").action.pocset();
  CHECK_THROWS_AS(tower(P, 10), Error);
}
