#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/structure.hpp"
#include "oracle.hpp"

using namespace mediankit;

namespace {

const Pocset& fixturePocset(const std::string& name) {
  static std::map<std::string, Pocset> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, actionFixture(name).action.pocset()).first;
  return it->second;
}

Automorphism byNames(const Pocset& P, const std::vector<std::pair<std::string, std::string>>& pairs) {
  Automorphism g = identity(P);
  for (const auto& [a, b] : pairs) {
    g.map[P.at(a)] = P.at(b);
    g.map[P.star(P.at(a))] = P.star(P.at(b));
  }
  return g;
}

}  // namespace

TEST_CASE("transversality matches the point oracle") {
  for (const auto& name : {"SQUARE", "PATH3", "TRIPOD", "GRID", "GRID23"}) {
    const Pocset& P = fixturePocset(name);
    auto pts = oracle::points(P);
    for (std::size_t h = 0; h < P.size(); ++h)
      for (std::size_t k = 0; k < P.size(); ++k) CHECK(transverse(P, h, k) == oracle::transverse(P, pts, h, k));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Pocset()) == 0);
  CHECK(rank(fixturePocset("SQUARE")) == 2);
  CHECK(rank(fixturePocset("GRID")) == 2);
  CHECK(rank(fixturePocset("PATH3")) == 1);
  CHECK(rank(fixturePocset("TRIPOD")) == 1);
  CHECK(rank(fixturePocset("F2BALL")) == 1);
}

TEST_CASE("rank agrees with subset enumeration") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Pocset P = randomPocset(rng, 7);
    CHECK(rank(P) == oracle::rank(P, oracle::points(P)));
  }
}

TEST_CASE("rank clique is lexicographically least") {
  const Pocset& P = fixturePocset("GRID");
  auto r = rankWithClique(P);
  REQUIRE(r.walls.size() == 2);
  CHECK(P.wall(r.walls[0]).id == "x1");
  CHECK(P.wall(r.walls[1]).id == "y1");
}

TEST_CASE("decomposition examples") {
  CHECK(decompose(fixturePocset("SQUARE")).factors.size() == 2);
  CHECK(decompose(fixturePocset("TRIPOD")).factors.size() == 1);
  auto D = decompose(fixturePocset("GRID"));
  REQUIRE(D.factors.size() == 2);
  for (const auto& f : D.factors) {
    CHECK(f.wallCount() == 3);
    CHECK(points(f).size() == 4);
    CHECK(rank(f) == 1);
  }
}

TEST_CASE("product and decomposition round trip") {
  Pocset A = pathPocset(2, "p");
  Pocset B = actionFixture("TRIPOD").action.pocset();
  Pocset AB = product(A, B, "A.", "B.");
  CHECK(validate(AB).ok());
  CHECK(points(AB).size() == points(A).size() * points(B).size());
  CHECK(rank(AB) == rank(A) + rank(B));
  auto D = decompose(AB);
  REQUIRE(D.factors.size() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& f : D.factors) sizes.insert(points(f).size());
  CHECK(sizes == std::multiset<std::size_t>{3, 4});

  // distances split over the factors
  auto pts = points(AB);
  for (const auto& x : pts)
    for (const auto& y : pts) {
      Rational sum(0);
      for (std::size_t i = 0; i < D.factors.size(); ++i)
        sum += distance(D.factors[i], projectToFactor(D, i, x), projectToFactor(D, i, y));
      CHECK(sum == distance(AB, x, y));
    }
}

TEST_CASE("automorphism group orders") {
  const Pocset& P = fixturePocset("SQUARE");
  auto G = automorphisms(P);
  CHECK(G.size() == 8);
  CHECK(sameMap(G.front(), identity(P)));
  Pocset W = PocsetBuilder().addWall("a", "a", "a*", Rational(2)).addWall("b", "b", "b*").build();
  CHECK(automorphisms(W).size() == 4);
  CHECK(automorphisms(fixturePocset("TRIPOD")).size() == 6);
}

TEST_CASE("automorphisms act on points as isometries") {
  const Pocset& P = fixturePocset("GRID");
  auto pts = points(P);
  for (const auto& g : automorphisms(P)) {
    CHECK(isAutomorphism(P, g.map));
    CHECK(sameMap(compose(g, inverse(g)), identity(P)));
    for (const auto& x : pts) {
      Point gx = applyToPoint(g, x);
      CHECK(isUltrafilter(P, gx));
      CHECK(distance(P, gx, applyToPoint(g, pts[0])) == distance(P, x, pts[0]));
    }
  }
}

TEST_CASE("non-automorphisms are rejected") {
  const Pocset& P = fixturePocset("PATH3");
  auto m = identity(P).map;
  std::swap(m[P.at("h1")], m[P.at("h2")]);
  CHECK_FALSE(isAutomorphism(P, m));
}

TEST_CASE("factor permutations") {
  const Pocset& P = fixturePocset("SQUARE");
  auto D = decompose(P);
  CHECK(factorPermutation(P, D, identity(P)) == std::vector<std::size_t>{0, 1});
  auto swap = byNames(P, {{"a", "b"}, {"b", "a"}});
  CHECK(factorPermutation(P, D, swap) == std::vector<std::size_t>{1, 0});

  const Pocset& G = fixturePocset("GRID");
  auto DG = decompose(G);
  auto fx = byNames(G, {{"x1", "x3*"}, {"x2", "x2*"}, {"x3", "x1*"}});
  CHECK(isAutomorphism(G, fx.map));
  CHECK(factorPermutation(G, DG, fx) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("every automorphism of a product permutes its factors") {
  const Pocset& P = fixturePocset("GRID");
  auto D = decompose(P);
  for (const auto& g : automorphisms(P)) {
    auto perm = factorPermutation(P, D, g);
    std::vector<std::size_t> s = perm;
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::size_t>{0, 1});
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (auto w : D.factorWalls[i]) {
        std::size_t img = P.wallOf(g.map[P.wall(w).pos]);
        CHECK(std::find(D.factorWalls[perm[i]].begin(), D.factorWalls[perm[i]].end(), img) !=
              D.factorWalls[perm[i]].end());
      }
  }
}
