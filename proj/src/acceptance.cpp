#include "mediankit/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "mediankit/actions.hpp"
#include "mediankit/boundary.hpp"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/structure.hpp"
#include "mediankit/subdivision.hpp"

namespace mediankit {

namespace {

struct Failure {
  std::string what;
};

void check(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

const std::vector<std::string> kTotalFixtures{"SQUARE", "PATH3", "TRIPOD", "GRID", "GRID23", "EDGE"};

std::vector<Point> allPoints(const Pocset& P) { return points(P, 64); }

// Pairwise distances of a point list.
std::vector<std::vector<Rational>> distanceTable(const Pocset& P, const std::vector<Point>& pts) {
  std::vector<std::vector<Rational>> d(pts.size(), std::vector<Rational>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d[i][j] = d[j][i] = distance(P, pts[i], pts[j]);
  return d;
}

// Weighted graph distances: neighbours differ on exactly one wall.
std::vector<std::vector<Rational>> graphDistances(const Pocset& P, const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Bits diff = pts[i] ^ pts[j];
      if (diff.count() != 2) continue;
      Rational w = P.weightOf(diff.find_first());
      adj[i].push_back({j, w});
      adj[j].push_back({i, w});
    }
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::optional<Rational>> dist(n);
    dist[s] = Rational(0);
    std::vector<char> done(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
      std::size_t u = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!done[v] && dist[v] && (u == n || *dist[v] < *dist[u])) u = v;
      if (u == n) break;
      done[u] = 1;
      for (auto [v, w] : adj[u])
        if (!dist[v] || *dist[u] + w < *dist[v]) dist[v] = *dist[u] + w;
    }
    for (auto& x : dist) out[s].push_back(x ? *x : Rational(-1));
  }
  return out;
}

Pocset smallRandomPocset(std::mt19937_64& rng, std::size_t maxWalls, std::size_t maxPoints) {
  for (;;) {
    Pocset P = randomPocset(rng, maxWalls);
    if (points(P).size() <= maxPoints) return P;
  }
}

std::string c1(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t triples = 0;
  auto run = [&](const Pocset& P) {
    auto pts = allPoints(P);
    auto d = distanceTable(P, pts);
    std::map<Point, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
    auto between = [&](std::size_t a, std::size_t b, std::size_t z) { return d[a][z] + d[z][b] == d[a][b]; };
    for (std::size_t x = 0; x < pts.size(); ++x)
      for (std::size_t y = 0; y < pts.size(); ++y)
        for (std::size_t z = 0; z < pts.size(); ++z) {
          std::vector<std::size_t> found;
          for (std::size_t m = 0; m < pts.size(); ++m)
            if (between(x, y, m) && between(y, z, m) && between(z, x, m)) found.push_back(m);
          check(found.size() == 1, "oracle median not unique");
          auto it = index.find(median(pts[x], pts[y], pts[z]));
          check(it != index.end() && it->second == found[0], "majority vote differs from oracle");
          ++triples;
        }
  };
  for (int i = 0; i < 100; ++i) run(smallRandomPocset(rng, 10, 24));
  for (const auto& name : kTotalFixtures) run(actionFixture(name).action.pocset());
  run(actionFixture("LINE").action.pocset());
  return std::to_string(triples) + " triples (100 random pocsets + 7 fixtures)";
}

std::string c2(std::uint64_t) {
  std::size_t pairs = 0;
  for (const auto& name : actionFixtureNames()) {
    auto fx1 = actionFixture(name);
    const Pocset& P = fx1.action.pocset();
    std::vector<Point> pts = name == "F2BALL" ? points(P, 1024) : allPoints(P);
    auto g = graphDistances(P, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        check(measure(P, separating(P, pts[i], pts[j])) == g[i][j], name + ": measure differs from path metric");
        check(distance(P, pts[i], pts[j]) == g[i][j], name + ": distance differs from path metric");
        ++pairs;
      }
  }
  return std::to_string(pairs) + " ordered pairs over all fixtures";
}

std::string c3(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  for (int inst = 0; inst < 1000; ++inst) {
    Pocset P = smallRandomPocset(rng, 8, 32);
    auto pts = points(P);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    std::vector<Point> S;
    for (std::size_t k = 1 + pick(3); k > 0; --k) S.push_back(pts[pick(pts.size())]);
    auto C = convexHull(P, pts, S).points;
    const Point& x = pts[pick(pts.size())];
    Point g = gateProject(P, C, x);
    check(containsPoint(C, g), "gate outside C");
    for (const auto& z : C)
      check(distance(P, x, g) + distance(P, g, z) == distance(P, x, z), "gate not in I(x,z)");
  }
  return "1000 instances";
}

std::vector<std::set<std::string>> wallPartition(const Pocset& P) {
  auto D = decompose(P);
  std::vector<std::set<std::string>> out;
  for (const auto& ws : D.factorWalls) {
    std::set<std::string> s;
    for (auto w : ws) s.insert(P.wall(w).id);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string c4(std::uint64_t seed) {
  auto fx2 = actionFixture("GRID");
  const Pocset& G = fx2.action.pocset();
  auto D = decompose(G);
  check(D.factors.size() == 2, "GRID does not split in two");
  for (const auto& F : D.factors) {
    check(F.wallCount() == 3 && rank(F) == 1 && points(F).size() == 4, "factor is not a three-wall path");
    for (std::size_t h = 0; h < F.size(); ++h)
      for (std::size_t k = 0; k < F.size(); ++k)
        check(F.wallOf(h) == F.wallOf(k) || F.comparable(h, k) || F.comparable(h, F.star(k)), "factor not a path");
  }
  Pocset R = product(D.factors[0], D.factors[1], "L.", "R.");
  auto gp = points(G), rp = points(R);
  check(gp.size() == 16 && rp.size() == 16, "point count is not 16");
  check(rank(G) == 2 && rank(D.factors[0]) + rank(D.factors[1]) == 2, "rank not additive");
  auto toProduct = [&](const Point& x) {
    Point y = R.emptySet();
    for (std::size_t f = 0; f < 2; ++f) {
      Point px = projectToFactor(D, f, x);
      for (auto h = px.find_first(); h != Bits::npos; h = px.find_next(h))
        y.set(R.at((f == 0 ? "L." : "R.") + D.factors[f].name(h)));
    }
    return y;
  };
  std::set<Point> images;
  for (const auto& x : gp) {
    images.insert(toProduct(x));
    for (const auto& y : gp) check(distance(G, x, y) == distance(R, toProduct(x), toProduct(y)), "distance changed");
  }
  check(images.size() == 16, "recomposition is not a bijection");

  std::mt19937_64 rng(seed + 4);
  for (int i = 0; i < 100; ++i) {
    Pocset A = randomPocset(rng, 5), B = randomPocset(rng, 5);
    Pocset AB = product(A, B, "L.", "R.");
    auto expected = wallPartition(A);
    for (auto& s : expected) {
      std::set<std::string> t;
      for (const auto& w : s) t.insert("L." + w);
      s = t;
    }
    for (auto s : wallPartition(B)) {
      std::set<std::string> t;
      for (const auto& w : s) t.insert("R." + w);
      expected.push_back(t);
    }
    std::sort(expected.begin(), expected.end());
    check(wallPartition(AB) == expected, "random product not recovered");
    check(rank(AB) == rank(A) + rank(B), "random product rank not additive");
  }
  return "GRID 16 = 4 x 4 points, rank 2 = 1 + 1; 100 random products recovered";
}

Automorphism lineReflection(const Pocset& P) {
  Automorphism g{"reflect", std::vector<std::size_t>(P.size())};
  for (int i = 0; i <= 20; ++i) {
    g.map[P.at("w" + std::to_string(i) + "+")] = P.at("w" + std::to_string(20 - i) + "-");
    g.map[P.at("w" + std::to_string(i) + "-")] = P.at("w" + std::to_string(20 - i) + "+");
  }
  return g;
}

std::string c5(std::uint64_t) {
  std::vector<std::string> names = kTotalFixtures;
  names.push_back("LINE");
  std::size_t lifted = 0;
  for (const auto& name : names) {
    auto fx3 = actionFixture(name);
    const Pocset& P = fx3.action.pocset();
    Subdivision S = subdivide(P);
    auto pts = allPoints(P);
    for (const auto& x : pts)
      for (const auto& y : pts)
        check(distance(S.child, S.embed(x), S.embed(y)) == distance(P, x, y), name + ": embedding not isometric");
    check(rank(S.child) == rank(P), name + ": rank changed");
    check(maxAtom(S.child) * Rational(2) == maxAtom(P), name + ": atom not halved");
    std::vector<Automorphism> group =
        name == "LINE" ? std::vector<Automorphism>{identity(P), lineReflection(P)} : automorphisms(P);
    for (const auto& g : group) {
      check(isAutomorphism(P, g.map), name + ": bad automorphism");
      Automorphism gl = lift(S, g);
      check(isAutomorphism(S.child, gl.map), name + ": lift is not an automorphism");
      for (std::size_t h = 0; h < S.child.size(); ++h)
        check(gl.map[h] != S.child.star(h), name + ": lift inverts a wall");
      ++lifted;
    }
  }
  auto sq = points(subdivide(actionFixture("SQUARE").action.pocset()).child);
  check(sq.size() == 9, "SQUARE' does not have 9 points");
  return "7 fixtures, " + std::to_string(lifted) + " lifted automorphisms, SQUARE' = 9 points";
}

std::string c6(std::uint64_t) {
  std::size_t subgroups = 0;
  bool tight = false;
  for (const auto& name : kTotalFixtures) {
    auto fx4 = actionFixture(name);
    const Pocset& P = fx4.action.pocset();
    auto group = automorphisms(P);
    const std::size_t n = group.size();
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[group[i].map] = i;
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mult[i][j] = index.at(compose(group[i], group[j]).map);
    auto generated = [&](std::set<std::size_t> s) {
      s.insert(0);
      for (bool grew = true; grew;) {
        grew = false;
        for (auto a : std::vector<std::size_t>(s.begin(), s.end()))
          for (auto b : std::vector<std::size_t>(s.begin(), s.end()))
            if (s.insert(mult[a][b]).second) grew = true;
      }
      return s;
    };
    std::set<std::set<std::size_t>> all{generated({})};
    std::vector<std::set<std::size_t>> todo(all.begin(), all.end());
    while (!todo.empty()) {
      auto H = todo.back();
      todo.pop_back();
      for (std::size_t g = 0; g < n; ++g) {
        if (H.count(g)) continue;
        auto K = H;
        K.insert(g);
        K = generated(K);
        if (all.insert(K).second) todo.push_back(K);
      }
    }
    for (const auto& H : all) {
      std::vector<PartialMap> gens;
      for (auto g : H) gens.push_back({group[g].name, group[g].map});
      auto o = minOrbit(Action(P, gens));
      check(o.size <= o.bound, name + ": orbit bound violated");
      if (name == "SQUARE" && H.size() == n && o.size == 4 && o.bound == 4) tight = true;
      ++subgroups;
    }
  }
  check(tight, "SQUARE full group does not attain 4 = 2^2");
  return std::to_string(subgroups) + " subgroups; SQUARE full group orbit 4 = 2^2";
}

bool anyStronglySeparated(const Pocset& P) {
  for (std::size_t h = 0; h < P.size(); ++h)
    for (std::size_t k = 0; k < P.size(); ++k)
      if (P.wallOf(h) != P.wallOf(k) && stronglySeparated(P, h, k)) return true;
  return false;
}

std::string c7(std::uint64_t) {
  auto fx5 = actionFixture("TRIPOD");
  const Pocset& T = fx5.action.pocset();
  auto fx6 = actionFixture("GRID");
  const Pocset& G = fx6.action.pocset();
  check(stronglySeparated(T, T.at("h1"), T.at("h2")), "TRIPOD h1, h2 not strongly separated");
  check(decompose(T).factors.size() == 1, "TRIPOD splits");
  check(!anyStronglySeparated(G), "GRID has a strongly separated pair");
  check(decompose(G).factors.size() == 2, "GRID does not split");
  return "TRIPOD: (h1,h2) strongly separated, 1 factor; GRID: no pair, 2 factors";
}

std::string c8(std::uint64_t) {
  auto F = actionFixture("F2BALL");
  const Action& A = F.action;
  const Pocset& P = A.pocset();
  auto cert = pingpong(A, A.parse("a"), A.parse("b"), P.at("wa+"), P.at("wb+"), 4);
  check(cert.depth == 4, "brute force stopped at depth " + std::to_string(cert.depth));
  check(cert.wordsChecked == 4 + 12 + 36 + 108, "unexpected word count");
  return "VERIFIED; all " + std::to_string(cert.wordsChecked) +
         " nonempty reduced words of length <= 4 checked";
}

std::string c9(std::uint64_t) {
  const ChainSystem S = systemFixture("STAIRFLAP").system;
  const std::size_t H = S.chainAt("H"), K = S.chainAt("K");
  check(validateSystem(S).ok(), "STAIRFLAP invalid");
  Ubs all = inseparableClosure(S, tail(S, H, 0));
  check(all.parts[K] && all.parts[K]->lo == 0 && all.parts[K]->infinite(), "closure of H>=0 misses some K_n");
  Ubs h1 = inseparableClosure(S, tail(S, H, 1));
  Ubs k1 = inseparableClosure(S, tail(S, K, 1));
  check(!h1.parts[K] && !k1.parts[H], "index-1 tails are not separate");
  check(almostContained(S, h1, all).contained && !almostContained(S, all, h1).contained,
        "closure of H>=0 is not strictly above a smaller class");
  auto G = ubsGraph(S);
  check(G.classes.size() == 2, "G has " + std::to_string(G.classes.size()) + " vertices");
  for (const Ubs* u : {&h1, &k1}) {
    auto below = minimalClassesBelow(G, *u);
    check(below.size() == 1 && G.classes[below[0]] == u->infiniteChains(), "index-1 tail is not minimal");
  }
  check(G.edges.size() == 1 && G.classes[G.edges[0].first] == std::vector<std::size_t>{H} &&
            G.classes[G.edges[0].second] == std::vector<std::size_t>{K},
        "edge is not H -> K");
  return "closure(H>=0) = " + describe(S, all) + "; minimal: " + describe(S, h1) + ", " + describe(S, k1) +
         "; edge H -> K";
}

std::size_t bruteAntichain(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less) {
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && a != b && less(a, b)) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

std::string c10(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 10);
  std::size_t edges = 0, vertices = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    ChainSystem S = randomChainSystem(rng, k);
    auto G = ubsGraph(S);
    check(G.acyclic, "directed cycle in system " + std::to_string(i));
    check(G.reachabilityGivesEdge, "reachability without edge in system " + std::to_string(i));
    check(G.classes.size() <= G.rankProxy, "too many vertices in system " + std::to_string(i));
    edges += G.edges.size();
    vertices += G.classes.size();
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    // random order: a random DAG on a random permutation, closed transitively
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    std::bernoulli_distribution coin(0.25);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) lt[a][b] = coin(rng);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (lt[a][m] && lt[m][b]) lt[a][b] = 1;
    auto less = [&](std::size_t a, std::size_t b) { return lt[a][b] != 0; };
    auto cover = minChainCover(n, less);
    check(cover.size() == bruteAntichain(n, less), "Dilworth cover differs from max antichain");
    std::vector<char> seen(n, 0);
    for (const auto& c : cover)
      for (std::size_t j = 0; j < c.size(); ++j) {
        seen[c[j]] = 1;
        if (j) check(less(c[j - 1], c[j]), "cover element is not a chain");
      }
    check(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(n), "cover misses an element");
  }
  return "200 systems (" + std::to_string(vertices) + " vertices, " + std::to_string(edges) +
         " edges); 200 random posets";
}

std::string c11(std::uint64_t) {
  for (const auto& name : systemFixtureNames()) {
    auto F = systemFixture(name);
    const auto& S = F.system;
    for (const auto& x : chiVector(S, identityShift(S))) check(x == Rational(0), name + ": identity has nonzero chi");
    for (const auto& [gname, g] : F.shifts) {
      check(validateShift(S, S, g).ok(), name + ": shift " + gname + " invalid");
      auto chi = chiVector(S, g);
      auto G = ubsGraph(S);
      for (const auto& e : ubsPoset(S)) {
        Rational sum(0);
        for (auto v : e.vertices) sum += chi[v];
        check(transferCharacter(S, e.representative, g) == sum, name + ": chi not additive");
      }
      auto chi2 = chiVector(S, composeShift(g, g));
      for (std::size_t i = 0; i < chi.size(); ++i) check(chi2[i] == chi[i] * Rational(2), name + ": chi(g g) != 2 chi(g)");
    }
  }
  auto line = systemFixture("LINE");
  check(chiVector(line.system, line.shifts.at("shift")) == std::vector<Rational>{Rational(1)}, "LINE chi != 1");
  auto corner = systemFixture("CORNER4");
  check(chiVector(corner.system, corner.shifts.at("tx")) == std::vector<Rational>{Rational(1), Rational(0)},
        "CORNER4 horizontal chi != (1,0)");
  return "identity 0; additive; chi(g g) = 2 chi(g); LINE 1; CORNER4 (1,0)";
}

std::string c12(std::uint64_t) {
  const ChainSystem S = systemFixture("CORNER4").system;
  const std::vector<PlaneMap> translations{{0, 1, 0}, {0, 0, 1}, {0, -1, 2}, {0, 3, -2}};
  for (std::size_t c = 0; c < 4; ++c) {
    for (const auto& t : translations) {
      check(cornerImage(t, c) == c, "translation moves a corner");
      ShiftMap g = cornerShift(t, c);
      check(g.tau == std::vector<std::size_t>{0, 1}, "translation permutes chains");
      check(validateShift(S, S, g).ok(), "translation breaks the corner system");
      auto chi = chiVector(S, g);
      check(chi == std::vector<Rational>{Rational(cornerSign(c, 0) * t.dx), Rational(cornerSign(c, 1) * t.dy)},
            "unexpected translation character");
    }
  }
  const PlaneMap turn{1, 0, 0};
  std::size_t c = 0;
  ShiftMap total = identityShift(S);
  std::vector<std::size_t> cycle{0};
  for (int i = 0; i < 4; ++i) {
    ShiftMap g = cornerShift(turn, c);
    check(validateShift(S, S, g).ok(), "rotation breaks a corner system");
    check(g.tau == std::vector<std::size_t>{1, 0}, "rotation does not swap the axes");
    total = composeShift(g, total);
    c = cornerImage(turn, c);
    cycle.push_back(c);
  }
  check(cycle == std::vector<std::size_t>{0, 1, 2, 3, 0}, "rotation is not a 4-cycle");
  check(total.tau == std::vector<std::size_t>{0, 1} && total.shift == std::vector<long>{0, 0},
        "four quarter turns are not the identity");
  return "translations fix all 4 corners with class-trivial shifts; quarter turn cycles (+,+) (-,+) (-,-) (+,-)";
}

std::string c13(std::uint64_t) {
  std::ostringstream out;
  {
    auto F = actionFixture("LINE");
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    for (const char* side : {"w10+", "w10-"}) {
      std::size_t h = P.at(side);
      auto w = doubleSkewer(A, h, h, 4);
      check(w.has_value() && w->size() <= 2, std::string("LINE ") + side + ": no short skewer");
      auto t = A.apply(*w, h);
      check(t && P.less(*t, h) && disjointHalfspaces(P, *t, P.star(h)), "LINE skewer fails verification");
      out << "LINE " << side << ": " << A.format(*w) << "; ";
    }
  }
  {
    auto F = actionFixture("F2BALL");
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    std::size_t h = P.at("wa-");
    auto w = doubleSkewer(A, h, h, 4);
    check(w.has_value(), "F2BALL: no skewer for the a-wall");
    bool powerOfA = !w->empty();
    for (const auto& l : *w) powerOfA = powerOfA && l == w->front() && l.gen == 0;
    check(powerOfA, "F2BALL skewer is not a power of a");
    for (const Word& g : {*w, A.parse("a^2")}) {
      auto t = A.apply(g, h);
      check(t && P.less(*t, h) && disjointHalfspaces(P, *t, P.star(h)),
            "F2BALL " + A.format(g) + " fails verification");
    }
    out << "F2BALL wa-: shortest " << A.format(*w) << ", a^2 verified";
  }
  return out.str();
}

const std::vector<std::pair<std::string, std::function<std::string(std::uint64_t)>>>& table() {
  static const std::vector<std::pair<std::string, std::function<std::string(std::uint64_t)>>> t{
      {"median oracle equivalence", c1},
      {"metric-measure identity", c2},
      {"gate law", c3},
      {"product round-trip and rank additivity", c4},
      {"subdivision suite", c5},
      {"orbit bound", c6},
      {"strong separation and irreducibility", c7},
      {"ping-pong certificate", c8},
      {"UBS fixture fidelity", c9},
      {"UBS graph laws and Dilworth", c10},
      {"transfer characters", c11},
      {"four corners", c12},
      {"skewering", c13},
  };
  return t;
}

}  // namespace

CriterionResult runCriterion(int id, std::uint64_t seed) {
  const auto& t = table();
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > static_cast<int>(t.size())) {
    r.title = "unknown";
    r.detail = "no such criterion";
    return r;
  }
  r.title = t[id - 1].first;
  try {
    r.detail = t[id - 1].second(seed);
    r.passed = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

std::vector<CriterionResult> runAcceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(table().size()); ++id) out.push_back(runCriterion(id, seed));
  return out;
}

}  // namespace mediankit
