#include <set>

#include "doctest.h"
#include "mediankit/actions.hpp"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/structure.hpp"
#include "mediankit/subdivision.hpp"

using namespace mediankit;

namespace {

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

// Orbit closure by repeated generator application.
std::set<Point> orbitOracle(const Action& A, const Point& x) {
  std::set<Point> seen{x};
  std::vector<Point> todo{x};
  while (!todo.empty()) {
    Point y = todo.back();
    todo.pop_back();
    for (std::size_t g = 0; g < A.generatorCount(); ++g)
      for (bool inv : {false, true}) {
        auto z = A.applyPoint(Word{Letter{g, inv}}, y);
        REQUIRE(z);
        if (seen.insert(*z).second) todo.push_back(*z);
      }
  }
  return seen;
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  auto F = actionFixture("F2BALL");
  const Action& A = F.action;
  CHECK(A.format(A.parse("abAB")) == "a b a^-1 b^-1");
  CHECK(A.format(A.parse("a^2 b^-1")) == "a^2 b^-1");
  CHECK(A.format(A.parse("a.a.b")) == "a^2 b");
  CHECK(A.format(Word{}) == "1");
  CHECK(A.parse("1").empty());
  CHECK_THROWS_AS(A.parse("c"), Error);
  CHECK(freeReduce(A.parse("a b B A b")) == A.parse("b"));
  CHECK(inverseWord(A.parse("a b^-1")) == A.parse("b a^-1"));
  CHECK(power(A.parse("a b"), -2) == A.parse("B A B A"));
  CHECK(concat(A.parse("a"), A.parse("b")) == A.parse("ab"));
}

TEST_CASE("reduced words") {
  const Action& A = actionFixture("F2BALL").action;
  CHECK(A.alphabet().size() == 4);
  std::size_t expected = 4;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ws = A.reducedWords(n);
    CHECK(ws.size() == expected);
    for (const auto& w : ws) CHECK(freeReduce(w) == w);
    expected *= 3;
  }
  CHECK(A.format(A.reducedWords(1)[1]) == "a^-1");
}

TEST_CASE("words act right to left") {
  auto F = actionFixture("SQUARE");
  const Action& A = F.action;
  const Pocset& P = A.pocset();
  Word rf = A.parse("r f");
  // f then r
  std::size_t viaSteps = *A.apply(A.parse("r"), *A.apply(A.parse("f"), P.at("a")));
  CHECK(*A.apply(rf, P.at("a")) == viaSteps);
  CHECK(sameMap(A.evaluate(rf), compose(A.evaluate(A.parse("r")), A.evaluate(A.parse("f")))));
}

TEST_CASE("actions validate") {
  for (const auto& name : actionFixtureNames()) CHECK_MESSAGE(validateAction(actionFixture(name).action).ok(), name);
  const Pocset P = actionFixture("PATH3").action.pocset();
  PartialMap bad{"bad", std::vector<std::size_t>(P.size(), kUndefined)};
  bad.image[P.at("h1")] = P.at("h2");
  bad.image[P.at("h2")] = P.at("h1");
  CHECK_FALSE(validateAction(Action(P, {bad})).ok());
}

TEST_CASE("window image of a point") {
  auto F = actionFixture("LINE");
  const Action& A = F.action;
  Point c = F.namedPoints.at("center");
  auto moved = A.applyPoint(A.parse("s"), c);
  REQUIRE(moved);
  CHECK(distance(A.pocset(), *moved, c) == Rational(1));
  // the window sees a far translate as its top vertex
  auto far = A.applyPoint(power(A.parse("s"), 15), c);
  REQUIRE(far);
  CHECK(distance(A.pocset(), *far, c) == Rational(11));
  CHECK_FALSE(A.applyPoint(power(A.parse("s"), 25), c));
}

TEST_CASE("wall inversions") {
  auto E = actionFixture("EDGE");
  CHECK(wallInversions(E.action, Word{}).empty());
  CHECK(wallInversions(E.action, E.action.parse("swap")) == std::vector<std::size_t>{0});
  auto S = subdivide(E.action.pocset());
  Automorphism g = E.action.evaluate(E.action.parse("swap"));
  Automorphism gl = lift(S, g);
  Action lifted(S.child, {PartialMap{"swap'", gl.map}});
  CHECK(wallInversions(lifted, lifted.parse("swap'")).empty());
}

TEST_CASE("orbits") {
  auto Sq = actionFixture("SQUARE");
  auto m = minOrbit(Sq.action);
  CHECK(m.size == 4);
  CHECK(m.bound == 4);
  auto T = actionFixture("TRIPOD");
  auto mt = minOrbit(T.action);
  CHECK(mt.size == 1);
  CHECK(mt.orbit.front() == T.namedPoints.at("center"));
  Action trivial(Sq.action.pocset(), {});
  CHECK(minOrbit(trivial).size == 1);
  for (const auto& x : points(Sq.action.pocset())) {
    auto o = orbit(Sq.action, x);
    CHECK(std::set<Point>(o.begin(), o.end()) == orbitOracle(Sq.action, x));
  }
}

TEST_CASE("nested halfspaces") {
  auto L = actionFixture("LINE");
  const Pocset& P = L.action.pocset();
  auto r = findNested(L.action, L.namedPoints.at("center"), L.action.parse("s^9"));
  CHECK(L.action.format(r.word) == "s");
  CHECK(P.name(r.halfspace) == "w10+");
  auto img = L.action.apply(r.word, r.halfspace);
  REQUIRE(img);
  CHECK(P.less(*img, r.halfspace));
  CHECK(r.displacement > r.threshold);

  auto Sq = actionFixture("SQUARE");
  CHECK(codeOf([&] { findNested(Sq.action, points(Sq.action.pocset())[0], Sq.action.parse("r")); }) ==
        ErrorCode::DisplacementTooSmall);

  auto F = actionFixture("F2BALL");
  auto rf = findNested(F.action, F.namedPoints.at("origin"), F.action.parse("abab"));
  auto fi = F.action.apply(rf.word, rf.halfspace);
  REQUIRE(fi);
  CHECK(F.action.pocset().less(*fi, rf.halfspace));
}

TEST_CASE("flipping") {
  auto T = actionFixture("TRIPOD");
  const Pocset& P = T.action.pocset();
  auto r = findFlip(T.action, P.at("h1*"), 4);
  REQUIRE(r.kind == FlipKind::Flipped);
  CHECK(T.action.format(r.word) == "rho");
  std::size_t img = *T.action.apply(r.word, P.at("h1"));
  CHECK(P.less(img, P.at("h1*")));
  CHECK(disjointHalfspaces(P, img, P.at("h1")));

  // h1 itself: every image of h1* contains h1, so nothing is flipped
  auto r1 = findFlip(T.action, P.at("h1"), 4);
  CHECK(r1.kind == FlipKind::InvariantSet);
  CHECK_FALSE(r1.invariantPoints.empty());

  auto Sq = actionFixture("SQUARE");
  Action trivial(Sq.action.pocset(), {});
  const Pocset& Q = trivial.pocset();
  auto ri = findFlip(trivial, Q.at("a"), 3);
  REQUIRE(ri.kind == FlipKind::InvariantSet);
  CHECK(Q.names(ri.invariantSigma) == std::vector<std::string>{"a*"});
  CHECK(ri.invariantPoints.size() == 2);

  auto L = actionFixture("LINE");
  for (const auto& h : {"w10+", "w10-"}) {
    auto rl = findFlip(L.action, L.action.pocset().at(h), 6);
    CHECK(rl.kind == FlipKind::Inconclusive);
    CHECK(rl.maxLength == 6);
  }
}

TEST_CASE("double skewering") {
  auto L = actionFixture("LINE");
  const Pocset& P = L.action.pocset();
  auto up = doubleSkewer(L.action, P.at("w10+"), P.at("w10+"), 4);
  REQUIRE(up);
  CHECK(L.action.format(*up) == "s");
  auto down = doubleSkewer(L.action, P.at("w10-"), P.at("w10-"), 4);
  REQUIRE(down);
  CHECK(L.action.format(*down) == "s^-1");
  auto pair = doubleSkewer(L.action, P.at("w12+"), P.at("w10+"), 4);
  REQUIRE(pair);
  CHECK(P.less(*L.action.apply(*pair, P.at("w10+")), P.at("w12+")));

  auto Sq = actionFixture("SQUARE");
  Action trivial(Sq.action.pocset(), {});
  CHECK_FALSE(doubleSkewer(trivial, trivial.pocset().at("a"), trivial.pocset().at("a"), 3));

  auto F = actionFixture("F2BALL");
  const Pocset& FP = F.action.pocset();
  std::size_t wa = FP.at("wa-");
  auto w = doubleSkewer(F.action, wa, wa, 3);
  REQUIRE(w);
  CHECK(F.action.format(*w) == "a");
  auto a2 = F.action.apply(F.action.parse("a^2"), wa);
  REQUIRE(a2);
  CHECK(FP.less(*a2, wa));
}

TEST_CASE("strong separation") {
  const Pocset T = actionFixture("TRIPOD").action.pocset();
  CHECK(stronglySeparated(T, T.at("h1"), T.at("h2")));
  const Pocset S = actionFixture("SQUARE").action.pocset();
  CHECK_FALSE(stronglySeparated(S, S.at("a"), S.at("b*")));
  const Pocset G = actionFixture("GRID").action.pocset();
  CHECK(disjointHalfspaces(G, G.at("x1*"), G.at("x2")));
  CHECK_FALSE(stronglySeparated(G, G.at("x1*"), G.at("x2")));
}

TEST_CASE("facing tuples") {
  const Pocset T = actionFixture("TRIPOD").action.pocset();
  auto t = facingTuple(T, 3);
  REQUIRE(t);
  CHECK(T.name((*t)[0]) == "h1");
  CHECK(T.name((*t)[1]) == "h2");
  CHECK(T.name((*t)[2]) == "h3");
  CHECK_FALSE(facingTuple(actionFixture("SQUARE").action.pocset(), 3));
  CHECK_FALSE(facingTuple(T, 4));

  auto F = actionFixture("F2BALL");
  const Pocset& P = F.action.pocset();
  auto r = facingTuple(F.action, 4, 4);
  REQUIRE(r);
  REQUIRE(r->tuple.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(disjointHalfspaces(P, r->tuple[i], r->tuple[j]));
      CHECK(P.wallOf(r->tuple[i]) != P.wallOf(r->tuple[j]));
    }
}

TEST_CASE("sector halfspaces") {
  const Pocset S = actionFixture("SQUARE").action.pocset();
  CHECK(sectorHalfspace(S, S.at("a"), S.at("b")).productWitness);
  const Pocset G = actionFixture("GRID23").action.pocset();
  auto r = sectorHalfspace(G, G.at("x1"), G.at("y2"));
  CHECK(r.productWitness);
  CHECK(r.partMatchesFactors);
  const Pocset F = actionFixture("F2BALL").action.pocset();
  CHECK(codeOf([&] { sectorHalfspace(F, F.at("wa+"), F.at("wb+")); }) == ErrorCode::NotTransverse);
  // a third wall inside a sector
  const Pocset H = actionFixture("GRID").action.pocset();
  auto rh = sectorHalfspace(H, H.at("x2"), H.at("y2"));
  if (!rh.productWitness) {
    CHECK(H.leq(rh.halfspace, rh.sectorH));
    CHECK(H.leq(rh.halfspace, rh.sectorK));
  }
}

TEST_CASE("ping-pong certificates") {
  auto F = actionFixture("F2BALL");
  const Action& A = F.action;
  const Pocset& P = A.pocset();
  auto c = pingpong(A, A.parse("a"), A.parse("b"), P.at("wa+"), P.at("wb+"), 4);
  CHECK(c.depth == 4);
  CHECK(c.wordsChecked == 160);
  CHECK_FALSE(c.facts.empty());

  auto Sq = actionFixture("SQUARE");
  const Pocset& Q = Sq.action.pocset();
  CHECK(codeOf([&] { pingpong(Sq.action, Sq.action.parse("r"), Sq.action.parse("r"), Q.at("a"), Q.at("b"), 2); }) ==
        ErrorCode::NotFacing);
  CHECK(codeOf([&] { pingpong(A, A.parse("a"), A.parse("b"), P.at("wa+"), P.at("wa+"), 2); }) ==
        ErrorCode::NotFacing);
}

TEST_CASE("classification") {
  auto Sq = actionFixture("SQUARE");
  auto r = classify(Sq.action, 3);
  CHECK(r.verdict == Verdict::RollerElementary);
  CHECK(r.orbit.size() == 4);

  auto T = actionFixture("TRIPOD");
  Action trivial(T.action.pocset(), {});
  auto rt = classify(trivial, 3);
  CHECK(rt.verdict == Verdict::RollerElementary);
  CHECK(rt.orbit.size() == 1);

  auto F = actionFixture("F2BALL");
  auto rf = classify(F.action, 4);
  CHECK(rf.verdict == Verdict::FreeSubgroup);
  CHECK(rf.certificate.has_value());
  CHECK(verdictName(Verdict::FreeSubgroup) == "FREE_SUBGROUP");
}

TEST_CASE("lineal pairs") {
  CHECK(linealPairs(actionFixture("PATH3").action.pocset()).size() == 1);
  CHECK(linealPairs(actionFixture("SQUARE").action.pocset()).size() == 2);
  CHECK(linealPairs(actionFixture("TRIPOD").action.pocset()).empty());
}

TEST_CASE("window images compose the whole word") {
  auto F = actionFixture("LINE");
  const Action& A = F.action;
  Point c = F.namedPoints.at("center");
  auto back = A.applyPoint(concat(power(A.parse("s"), -3), power(A.parse("s"), 3)), c);
  REQUIRE(back);
  CHECK(*back == c);
  // concat reduces the word, so this is the identity
  CHECK(*A.applyPoint(concat(power(A.parse("s"), -15), power(A.parse("s"), 15)), c) == c);
  Word unreduced = power(A.parse("s"), -15);
  for (const auto& l : power(A.parse("s"), 15)) unreduced.push_back(l);
  CHECK_FALSE(A.applyPoint(unreduced, c));
}
