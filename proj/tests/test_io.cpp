#include <string>

#include "doctest.h"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/io.hpp"
#include "mediankit/structure.hpp"

using namespace mediankit;

namespace {

std::string messageOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

bool samePocset(const Pocset& a, const Pocset& b) {
  if (a.size() != b.size() || a.wallCount() != b.wallCount()) return false;
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto h2 = b.find(a.name(h));
    if (!h2 || b.name(b.star(*h2)) != a.name(a.star(h)) || b.weightOf(*h2) != a.weightOf(h)) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a.leq(h, k) != b.leq(*h2, b.at(a.name(k)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pocset files round trip") {
  for (const auto& name : actionFixtureNames()) {
    const Pocset P = actionFixture(name).action.pocset();
    Json j = pocsetToJson(P);
    Pocset Q = pocsetFromJson(parseJson(j.dump()));
    CHECK_MESSAGE(samePocset(P, Q), name);
    CHECK(pocsetToJson(Q) == j);
  }
}

TEST_CASE("pocset file with weights and order") {
  Pocset P = pocsetFromJson(parseJson(R"({
    "walls": [{"id": "a", "pos": "a", "neg": "a*", "weight": "1/2"},
              {"id": "b", "pos": "b", "neg": "b*", "weight": "3"}],
    "order": [["a", "b"]]})"));
  CHECK(P.wallCount() == 2);
  CHECK(P.weightOf(P.at("a*")) == Rational(1, 2));
  CHECK(P.leq(P.at("a"), P.at("b")));
  CHECK(P.leq(P.at("b*"), P.at("a*")));
  CHECK(points(P).size() == 3);
}

TEST_CASE("action files round trip") {
  for (const auto& name : {"SQUARE", "TRIPOD", "LINE", "F2BALL"}) {
    const Action A = actionFixture(name).action;
    Action B = actionFromJson(parseJson(actionToJson(A).dump()));
    REQUIRE(B.generatorCount() == A.generatorCount());
    CHECK(samePocset(A.pocset(), B.pocset()));
    for (std::size_t g = 0; g < A.generatorCount(); ++g) {
      CHECK(B.generator(g).name == A.generator(g).name);
      for (std::size_t h = 0; h < A.pocset().size(); ++h) {
        std::size_t t = A.generator(g).image[h];
        std::size_t h2 = B.pocset().at(A.pocset().name(h));
        if (t == kUndefined)
          CHECK(B.generator(g).image[h2] == kUndefined);
        else
          CHECK(B.pocset().name(B.generator(g).image[h2]) == A.pocset().name(t));
      }
    }
    CHECK(actionToJson(B) == actionToJson(A));
  }
}

TEST_CASE("partial maps with a domain") {
  Action A = actionFromJson(parseJson(R"({
    "pocset": {"walls": [{"id": "p", "pos": "p", "neg": "p*"}, {"id": "q", "pos": "q", "neg": "q*"}],
               "order": [["q", "p"]]},
    "maps": [{"name": "s", "map": {"p": "q"}, "domain": ["p"]}]})"));
  const Pocset& P = A.pocset();
  CHECK_FALSE(A.isTotal());
  CHECK(*A.apply(A.parse("s"), P.at("p*")) == P.at("q*"));
  CHECK_FALSE(A.apply(A.parse("s"), P.at("q")));
}

TEST_CASE("automorphism files") {
  const Pocset P = actionFixture("SQUARE").action.pocset();
  Automorphism g = automorphismFromJson(P, parseJson(R"({"name": "swap", "map": {"a": "b", "b": "a"}})"));
  CHECK(g.name == "swap");
  CHECK(isAutomorphism(P, g.map));
  CHECK(g.map[P.at("a*")] == P.at("b*"));
  Automorphism h = automorphismFromJson(P, automorphismToJson(P, g));
  CHECK(sameMap(g, h));
  Json bad = parseJson(R"({"name": "bad", "map": {"a": "a*", "b": "a"}})");
  CHECK_THROWS_AS(automorphismFromJson(P, bad), Error);
}

TEST_CASE("chain systems and shifts round trip") {
  for (const auto& name : systemFixtureNames()) {
    auto F = systemFixture(name);
    Json j = systemToJson(F.system);
    ChainSystem S = systemFromJson(parseJson(j.dump()));
    CHECK(systemToJson(S) == j);
    for (long n = 0; n < 10; ++n)
      for (long m = 0; m < 10; ++m)
        for (std::size_t a = 0; a < S.chainCount(); ++a)
          for (std::size_t b = 0; b < S.chainCount(); ++b) {
            if (a == b && n == m) continue;
            CHECK(S.rel({a, n}, {b, m}) == F.system.rel({a, n}, {b, m}));
          }
    for (const auto& [sname, g] : F.shifts) {
      ShiftMap g2 = shiftFromJson(S, shiftToJson(S, g));
      CHECK(g2.tau == g.tau);
      CHECK(g2.shift == g.shift);
      CHECK(g2.minIndex == g.minIndex);
    }
  }
}

TEST_CASE("parse errors carry line and column") {
  std::string msg = messageOf([] { parseJson("{\n  \"walls\": [\n    {\"id\": }\n]}"); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("field errors name the path") {
  std::string m1 = messageOf([] { pocsetFromJson(parseJson(R"({"walls": [{"id": "a", "pos": "a"}]})")); });
  CHECK(m1.find("walls[0].neg") != std::string::npos);
  std::string m2 = messageOf([] { pocsetFromJson(parseJson(R"({"order": []})")); });
  CHECK(m2.find("walls") != std::string::npos);
  std::string m3 = messageOf(
      [] { pocsetFromJson(parseJson(R"({"walls": [{"id": "a", "pos": "a", "neg": "a*", "weight": "x"}]})")); });
  CHECK(m3.find("walls[0].weight") != std::string::npos);
  std::string m4 = messageOf([] {
    pocsetFromJson(parseJson(R"({"walls": [{"id": "a", "pos": "a", "neg": "a*"}], "order": [["a", "zz"]]})"));
  });
  CHECK(m4.find("zz") != std::string::npos);
  std::string m5 = messageOf([] {
    systemFromJson(parseJson(R"({"chains": [{"id": "H", "period": 1, "weights": []}], "rel": {}})"));
  });
  CHECK(m5.find("chains[0]") != std::string::npos);
}

TEST_CASE("digest") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
  CHECK(digest("abc") != digest("abd"));
}

TEST_CASE("DOT export") {
  auto F = systemFixture("STAIRFLAP");
  std::string dot = ubsGraphDot(F.system, ubsGraph(F.system));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("H[1,inf)") != std::string::npos);
  CHECK(dot.find("v0 -> v1") != std::string::npos);
}
