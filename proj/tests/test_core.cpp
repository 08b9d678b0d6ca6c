#include <algorithm>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "oracle.hpp"

using namespace mediankit;

namespace {

Pocset square() { return actionFixture("SQUARE").action.pocset(); }

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Point pt(const Pocset& P, const std::string& spec) { return parsePoint(P, spec); }

}  // namespace

TEST_CASE("validate accepts the fixtures") {
  for (const auto& name : actionFixtureNames()) {
    auto F = actionFixture(name);
    CHECK_MESSAGE(validate(F.action.pocset()).ok(), name);
  }
}

TEST_CASE("validate rejects a halfspace equal to its complement") {
  Pocset P = PocsetBuilder().addWall("a", "a", "a").addWall("b", "b", "b*").build();
  auto rep = validate(P);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().kind == "fixed point of involution");
}

TEST_CASE("validate rejects a halfspace below its complement") {
  Pocset P = PocsetBuilder().addWall("a", "a", "a*").addWall("b", "b", "b*").addOrder("a", "a*").build();
  auto rep = validate(P);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations) found = found || v.kind == "comparable with complement";
  CHECK(found);
}

TEST_CASE("validate rejects nonpositive weights") {
  Pocset P = PocsetBuilder().addWall("a", "a", "a*", Rational(0)).build();
  CHECK_FALSE(validate(P).ok());
}

TEST_CASE("point counts of the small fixtures") {
  CHECK(points(square()).size() == 4);
  CHECK(points(actionFixture("PATH3").action.pocset()).size() == 4);
  CHECK(points(actionFixture("TRIPOD").action.pocset()).size() == 4);
  CHECK(points(actionFixture("GRID").action.pocset()).size() == 16);
  CHECK(points(actionFixture("EDGE").action.pocset()).size() == 2);
  CHECK(points(Pocset()).size() == 1);
}

TEST_CASE("points match the brute-force enumeration") {
  for (const auto& name : {"SQUARE", "PATH3", "TRIPOD", "GRID", "GRID23", "EDGE"}) {
    const Pocset P = actionFixture(name).action.pocset();
    auto pts = points(P);
    CHECK_MESSAGE(sorted(pts) == oracle::points(P), name);
    for (const auto& x : pts) CHECK(isUltrafilter(P, x));
  }
}

TEST_CASE("points are enumerated in a fixed order") {
  const Pocset P = actionFixture("GRID").action.pocset();
  CHECK(points(P) == points(P));
}

TEST_CASE("enumeration cap") {
  const Pocset P = actionFixture("LINE").action.pocset();
  CHECK_THROWS_AS(points(P, 5), Error);
  try {
    points(P, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WallBudgetExceeded);
  }
  CHECK(points(P, 21).size() == 22);
}

TEST_CASE("median on SQUARE") {
  const Pocset P = square();
  Point x = pt(P, "a,b"), y = pt(P, "a*,b"), z = pt(P, "a*,b*");
  CHECK(median(x, y, z) == y);
  CHECK(median(x, x, z) == x);
  CHECK(median(x, y, z) == median(z, x, y));
}

TEST_CASE("median agrees with metric intervals") {
  for (const auto& name : {"SQUARE", "PATH3", "TRIPOD", "GRID"}) {
    const Pocset P = actionFixture(name).action.pocset();
    auto pts = oracle::points(P);
    auto d = oracle::pathMetric(P, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t k = 0; k < pts.size(); ++k) {
          // the unique point between each pair
          std::vector<std::size_t> between;
          for (std::size_t m = 0; m < pts.size(); ++m)
            if (d[{i, m}] + d[{m, j}] == d[{i, j}] && d[{j, m}] + d[{m, k}] == d[{j, k}] &&
                d[{i, m}] + d[{m, k}] == d[{i, k}])
              between.push_back(m);
          REQUIRE(between.size() == 1);
          CHECK(median(pts[i], pts[j], pts[k]) == pts[between[0]]);
        }
  }
}

TEST_CASE("distance equals the weight of separating halfspaces") {
  Pocset P = PocsetBuilder()
                 .addWall("a", "a", "a*", Rational(1, 2))
                 .addWall("b", "b", "b*", Rational(3))
                 .addOrder("a", "b")
                 .build();
  auto pts = oracle::points(P);
  REQUIRE(pts.size() == 3);
  auto d = oracle::pathMetric(P, pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      CHECK(distance(P, pts[i], pts[j]) == d[{i, j}]);
      CHECK(measure(P, separating(P, pts[i], pts[j])) == d[{i, j}]);
    }
  CHECK(distance(P, pt(P, "a"), pt(P, "b*")) == Rational(7, 2));
}

TEST_CASE("separating sets") {
  const Pocset P = actionFixture("PATH3").action.pocset();
  auto pts = points(P);
  for (const auto& x : pts) CHECK(separating(P, std::vector<Point>{x}, std::vector<Point>{x}).none());

  // every pair of disjoint convex sets is separated by some halfspace
  std::vector<std::vector<Point>> convex;
  for (std::uint64_t mask = 1; mask < (1u << pts.size()); ++mask) {
    std::vector<Point> S;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1) S.push_back(pts[i]);
    if (isConvex(P, pts, S)) convex.push_back(S);
  }
  std::size_t pairs = 0;
  for (const auto& A : convex)
    for (const auto& B : convex) {
      bool disjoint = true;
      for (const auto& x : A)
        if (containsPoint(B, x)) disjoint = false;
      if (!disjoint) continue;
      ++pairs;
      CHECK(separating(P, A, B).any());
    }
  CHECK(pairs > 0);
}

TEST_CASE("intervals") {
  const Pocset P = square();
  Point x = pt(P, "a,b"), z = pt(P, "a*,b*");
  CHECK(interval(P, x, z).size() == 4);
  CHECK(interval(P, x, x).size() == 1);
  const Pocset Q = actionFixture("PATH3").action.pocset();
  auto pts = points(Q);
  for (const auto& u : pts)
    for (const auto& v : pts)
      for (const auto& w : pts)
        CHECK(inInterval(u, v, w) == (distance(Q, u, w) + distance(Q, w, v) == distance(Q, u, v)));
}

TEST_CASE("gate projection") {
  auto F = actionFixture("TRIPOD");
  const Pocset& P = F.action.pocset();
  Point center = F.namedPoints.at("center");
  Point leaf1 = pt(P, "h1"), leaf2 = pt(P, "h2");
  std::vector<Point> C{center, leaf1};
  CHECK(gateProject(P, C, leaf2) == center);
  CHECK(gateProject(P, C, leaf1) == leaf1);

  // the gate lies between x and every point of C
  const Pocset G = actionFixture("GRID").action.pocset();
  auto pts = points(G);
  auto hull = convexHull(G, pts, {pts[0], pts[5]});
  for (const auto& x : pts) {
    Point g = gateProject(G, hull.points, x);
    CHECK(containsPoint(hull.points, g));
    for (const auto& c : hull.points) CHECK(distance(G, x, c) == distance(G, x, g) + distance(G, g, c));
  }
}

TEST_CASE("convex hull") {
  const Pocset P = square();
  auto pts = points(P);
  auto h = convexHull(P, pts, {pt(P, "a,b"), pt(P, "a*,b*")});
  CHECK(h.points.size() == 4);
  CHECK(h.sigma.none());
  auto e = convexHull(P, pts, {pt(P, "a,b"), pt(P, "a*,b")});
  CHECK(e.points.size() == 2);
  CHECK(P.names(e.sigma) == std::vector<std::string>{"b"});
  CHECK(isConvex(P, pts, e.points));
  CHECK_FALSE(isConvex(P, pts, {pt(P, "a,b"), pt(P, "a*,b*")}));
}

TEST_CASE("inseparable closure") {
  const Pocset P = actionFixture("PATH3").action.pocset();
  Bits s = P.emptySet();
  s.set(P.at("h1"));
  s.set(P.at("h3"));
  Bits c = inseparableClosure(P, s);
  CHECK(P.names(c).size() == 3);
  CHECK(c[P.at("h2")]);
  CHECK(inseparableClosure(P, c) == c);
}

TEST_CASE("point parsing") {
  const Pocset P = square();
  CHECK(pt(P, "#0") == points(P)[0]);
  CHECK(pointLabel(P, pt(P, "a*,b")) == std::vector<std::string>{"a*", "b"});
  CHECK_THROWS_AS(pt(P, "a"), Error);
  CHECK_THROWS_AS(pt(P, "zz"), Error);
  CHECK_THROWS_AS(pt(P, "#9"), Error);
}
