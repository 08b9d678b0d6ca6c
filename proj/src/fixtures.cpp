#include "mediankit/fixtures.hpp"

#include <algorithm>
#include <functional>

#include "mediankit/errors.hpp"
#include "mediankit/structure.hpp"

namespace mediankit {

namespace {

PartialMap mapByNames(const Pocset& P, const std::string& name,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  PartialMap m{name, std::vector<std::size_t>(P.size(), kUndefined)};
  for (const auto& [from, to] : pairs) {
    std::size_t h = P.at(from), t = P.at(to);
    m.image[h] = t;
    m.image[P.star(h)] = P.star(t);
  }
  return m;
}

ActionFixture square() {
  Pocset P = PocsetBuilder().addWall("a", "a", "a*").addWall("b", "b", "b*").build();
  std::vector<PartialMap> gens{mapByNames(P, "r", {{"a", "b"}, {"b", "a*"}}),
                               mapByNames(P, "f", {{"a", "b"}, {"b", "a"}})};
  return {"SQUARE", "two transverse walls; rotation r and reflection f", Action(P, gens), {}};
}

ActionFixture path3() {
  Pocset P = pathPocset(3, "h");
  std::vector<PartialMap> gens{mapByNames(P, "flip", {{"h1", "h3*"}, {"h2", "h2*"}, {"h3", "h1*"}})};
  return {"PATH3", "three nested walls; end-to-end reflection", Action(P, gens), {}};
}

ActionFixture tripod() {
  PocsetBuilder b;
  for (int i = 1; i <= 3; ++i) b.addWall("h" + std::to_string(i), "h" + std::to_string(i), "h" + std::to_string(i) + "*");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) b.addOrder("h" + std::to_string(i), "h" + std::to_string(j) + "*");
  Pocset P = b.build();
  std::vector<PartialMap> gens{mapByNames(P, "rho", {{"h1", "h2"}, {"h2", "h3"}, {"h3", "h1"}})};
  std::map<std::string, Point> named{{"center", upClosure(P, [&] {
                                        Bits s = P.emptySet();
                                        for (auto n : {"h1*", "h2*", "h3*"}) s.set(P.at(n));
                                        return s;
                                      }())}};
  return {"TRIPOD", "three pairwise disjoint leaf halfspaces; leaf rotation rho", Action(P, gens), named};
}

ActionFixture grid() {
  Pocset P = product(pathPocset(3, "x"), pathPocset(3, "y"));
  std::vector<PartialMap> gens{
      mapByNames(P, "swap", {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"y1", "x1"}, {"y2", "x2"}, {"y3", "x3"}}),
      mapByNames(P, "fx", {{"x1", "x3*"}, {"x2", "x2*"}, {"x3", "x1*"}, {"y1", "y1"}, {"y2", "y2"}, {"y3", "y3"}})};
  return {"GRID", "product of two three-wall paths (4 x 4 points); factor swap and reflection", Action(P, gens), {}};
}

ActionFixture grid23() {
  Pocset P = product(pathPocset(2, "x"), pathPocset(3, "y"));
  return {"GRID23", "product of a two-wall and a three-wall path", Action(P, {}), {}};
}

ActionFixture edge() {
  Pocset P = PocsetBuilder().addWall("e", "e", "e*").build();
  return {"EDGE", "one wall; the point swap", Action(P, {mapByNames(P, "swap", {{"e", "e*"}})}), {}};
}

ActionFixture line() {
  const int walls = 21;
  PocsetBuilder b;
  for (int i = 0; i < walls; ++i) {
    std::string w = "w" + std::to_string(i);
    b.addWall(w, w + "+", w + "-");
  }
  for (int i = 0; i + 1 < walls; ++i) b.addOrder("w" + std::to_string(i + 1) + "+", "w" + std::to_string(i) + "+");
  Pocset P = b.build();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i + 1 < walls; ++i)
    pairs.push_back({"w" + std::to_string(i) + "+", "w" + std::to_string(i + 1) + "+"});
  Bits c = P.emptySet();
  for (int i = 0; i < walls; ++i) c.set(P.at("w" + std::to_string(i) + (i < 10 ? "+" : "-")));
  return {"LINE",
          "window of a line: 21 walls w0..w20, wI+ = vertices above I; shift s by one wall",
          Action(P, {mapByNames(P, "s", pairs)}),
          {{"center", c}}};
}

// Reduced words over a, b, A = a^-1, B = b^-1.
char inverseLetter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

std::string rightMultiply(const std::string& w, char c) {
  if (!w.empty() && w.back() == inverseLetter(c)) return w.substr(0, w.size() - 1);
  return w + c;
}

ActionFixture f2ball() {
  const std::size_t radius = 5;
  const std::string letters = "abAB";
  auto letterRank = [&](char c) { return letters.find(c); };
  std::vector<std::string> verts{""};
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].size() == radius) continue;
    for (char c : letters)
      if (verts[i].empty() || verts[i].front() != inverseLetter(c)) verts.push_back(std::string(1, c) + verts[i]);
  }
  std::stable_sort(verts.begin(), verts.end(), [&](const std::string& x, const std::string& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [&](char p, char q) { return letterRank(p) < letterRank(q); });
  });
  std::map<std::string, std::size_t> vindex;
  for (std::size_t i = 0; i < verts.size(); ++i) vindex[verts[i]] = i;

  // one wall per nonempty vertex u: the edge {u minus its first letter, u};
  // the + side is every word ending in u
  PocsetBuilder b;
  std::vector<std::string> far(verts.begin() + 1, verts.end());
  for (const auto& u : far) b.addWall("w" + u, "w" + u + "+", "w" + u + "-");
  std::vector<Bits> side(2 * far.size(), Bits(verts.size()));
  for (std::size_t i = 0; i < far.size(); ++i) {
    const auto& u = far[i];
    for (std::size_t v = 0; v < verts.size(); ++v) {
      const auto& x = verts[v];
      bool plus = x.size() >= u.size() && x.compare(x.size() - u.size(), u.size(), u) == 0;
      side[b.halfspace("w" + u + (plus ? "+" : "-"))].set(v);
    }
  }
  for (std::size_t h = 0; h < side.size(); ++h)
    for (std::size_t k = 0; k < side.size(); ++k)
      if (h != k && side[h].is_subset_of(side[k])) b.addOrder(h, k);
  Pocset P = b.build(false);

  auto generator = [&](const std::string& name, char letter) {
    PartialMap m{name, std::vector<std::size_t>(P.size(), kUndefined)};
    // g acts by v -> v g^-1
    char inv = inverseLetter(letter);
    for (const auto& u : far) {
      std::string near = u.substr(1);
      std::string iu = rightMultiply(u, inv), in = rightMultiply(near, inv);
      if (iu.size() > radius || in.size() > radius) continue;
      const std::string& imgFar = iu.size() > in.size() ? iu : in;
      std::string plus = "w" + u + "+", minus = "w" + u + "-";
      std::string tplus = "w" + imgFar + "+", tminus = "w" + imgFar + "-";
      bool keeps = imgFar == iu;
      m.image[P.at(plus)] = P.at(keeps ? tplus : tminus);
      m.image[P.at(minus)] = P.at(keeps ? tminus : tplus);
    }
    return m;
  };
  std::vector<PartialMap> gens{generator("a", 'a'), generator("b", 'b')};

  Bits origin = P.emptySet();
  for (const auto& u : far) origin.set(P.at("w" + u + "-"));
  return {"F2BALL",
          "radius-5 ball of the 4-valent tree (free group on a, b acting by v -> v g^-1); wall wU has + side "
          "the words ending in U",
          Action(P, gens),
          {{"origin", origin}}};
}

}  // namespace

Pocset pathPocset(std::size_t n, const std::string& prefix) {
  PocsetBuilder b;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string w = prefix + std::to_string(i);
    b.addWall(w, w, w + "*");
  }
  for (std::size_t i = 1; i < n; ++i) b.addOrder(prefix + std::to_string(i + 1), prefix + std::to_string(i));
  return b.build();
}

std::vector<std::string> actionFixtureNames() {
  return {"SQUARE", "PATH3", "TRIPOD", "GRID", "GRID23", "EDGE", "LINE", "F2BALL"};
}

ActionFixture actionFixture(const std::string& name) {
  static const std::map<std::string, std::function<ActionFixture()>> table{
      {"SQUARE", square}, {"PATH3", path3}, {"TRIPOD", tripod}, {"GRID", grid},
      {"GRID23", grid23}, {"EDGE", edge},   {"LINE", line},     {"F2BALL", f2ball}};
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::InvalidInput, "unknown fixture '" + name + "'");
  return it->second();
}

Point fixturePoint(const ActionFixture& F, const std::string& spec) {
  auto it = F.namedPoints.find(spec);
  if (it != F.namedPoints.end()) return it->second;
  return parsePoint(F.action.pocset(), spec);
}

namespace {

Chain unitChain(const std::string& id) { return Chain{id, {}, {Rational(1)}}; }

SystemFixture lineSystem() {
  SystemFixture f{"LINE", "one chain with unit weights", {}, {}};
  f.system.chains.push_back(unitChain("H"));
  f.shifts["shift"] = ShiftMap{{0}, {1}, 0};
  return f;
}

SystemFixture stairflap() {
  SystemFixture f{"STAIRFLAP",
                  "chains H, K: K_n contains H_m iff m > n, transverse iff 1 <= m <= n, K_n inside H_0",
                  {},
                  {}};
  auto& S = f.system;
  S.chains = {unitChain("H"), unitChain("K")};
  // from K (index n) to H (index m), offset m - n
  S.rules.push_back({1, 0, Rel::Sub, {}, {}, {0, 0}});
  S.rules.push_back({1, 0, Rel::Sup, {1, std::nullopt}, {}, {}});
  S.rules.push_back({1, 0, Rel::Transverse, {std::nullopt, 0}, {}, {1, std::nullopt}});
  f.shifts["shift"] = ShiftMap{{0, 1}, {1, 1}, 1};
  return f;
}

SystemFixture corner4() {
  SystemFixture f{"CORNER4", "the (+,+) corner of the square-tiled plane: independent chains X and Y", {}, {}};
  auto& S = f.system;
  S.chains = {unitChain("X"), unitChain("Y")};
  S.rules.push_back({0, 1, Rel::Transverse, {}, {}, {}});
  f.shifts["tx"] = ShiftMap{{0, 1}, {1, 0}, 0};
  f.shifts["ty"] = ShiftMap{{0, 1}, {0, 1}, 0};
  return f;
}

}  // namespace

std::vector<std::string> systemFixtureNames() { return {"LINE", "STAIRFLAP", "CORNER4"}; }

SystemFixture systemFixture(const std::string& name) {
  if (name == "LINE") return lineSystem();
  if (name == "STAIRFLAP") return stairflap();
  if (name == "CORNER4") return corner4();
  throw Error(ErrorCode::InvalidInput, "unknown chain-system fixture '" + name + "'");
}

Pocset randomPocset(std::mt19937_64& rng, std::size_t maxWalls) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t ground = pick(2, 8);
  const std::uint64_t full = (std::uint64_t(1) << ground) - 1;
  const std::size_t target = pick(1, maxWalls);
  std::vector<std::uint64_t> sides;
  for (int attempt = 0; attempt < 200 && sides.size() < target; ++attempt) {
    std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(1, full - 1)(rng);
    // each wall is stored by the side containing element 0
    if (!(s & 1)) s = full & ~s;
    if (std::find(sides.begin(), sides.end(), s) == sides.end()) sides.push_back(s);
  }
  PocsetBuilder b;
  std::vector<std::uint64_t> sets;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    std::string w = "w" + std::to_string(i);
    b.addWall(w, w + "+", w + "-", Rational(static_cast<long>(pick(1, 3)), static_cast<long>(pick(1, 2))));
    sets.push_back(sides[i]);
    sets.push_back(full & ~sides[i]);
  }
  for (std::size_t h = 0; h < sets.size(); ++h)
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (h != k && (sets[h] & ~sets[k]) == 0) b.addOrder(h, k);
  return b.build(false);
}

ChainSystem randomChainSystem(std::mt19937_64& rng, std::size_t chains) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const Rational weightChoices[] = {Rational(1), Rational(1, 2), Rational(2), Rational(3, 2)};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ChainSystem S;
    for (std::size_t i = 0; i < chains; ++i) {
      Chain c{std::string(1, static_cast<char>('A' + i)), {}, {}};
      for (long h = pick(0, 2); h > 0; --h) c.headWeights.push_back(weightChoices[pick(0, 3)]);
      for (long p = pick(1, 3); p > 0; --p) c.weights.push_back(weightChoices[pick(0, 3)]);
      S.chains.push_back(c);
    }
    for (std::size_t i = 0; i < chains; ++i)
      for (std::size_t j = i + 1; j < chains; ++j) {
        long a = pick(-2, 2);
        switch (pick(0, 3)) {
          case 0:
            S.rules.push_back({i, j, Rel::Transverse, {}, {}, {}});
            break;
          case 1:
            S.rules.push_back({i, j, Rel::Sup, {a, std::nullopt}, {}, {}});
            S.rules.push_back({i, j, Rel::Transverse, {}, {}, {}});
            break;
          case 2:
            S.rules.push_back({j, i, Rel::Sup, {a, std::nullopt}, {}, {}});
            S.rules.push_back({j, i, Rel::Transverse, {}, {}, {}});
            break;
          default: {
            long b = pick(std::max<long>(-a + 1, -2), 3);
            S.rules.push_back({i, j, Rel::Sup, {a, std::nullopt}, {}, {}});
            S.rules.push_back({i, j, Rel::Sub, {std::nullopt, -b}, {}, {}});
            S.rules.push_back({i, j, Rel::Transverse, {}, {}, {}});
          }
        }
      }
    if (validateSystem(S).ok()) return S;
  }
  throw Error(ErrorCode::InvalidInput, "no consistent random system found");
}

int cornerSign(std::size_t corner, int axis) {
  static const int signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  return signs[corner % 4][axis];
}

std::size_t cornerImage(const PlaneMap& m, std::size_t corner) {
  return (corner + static_cast<std::size_t>(((m.quarterTurns % 4) + 4) % 4)) % 4;
}

ShiftMap cornerShift(const PlaneMap& m, std::size_t corner) {
  ShiftMap g{{0, 1}, {0, 0}, 0};
  const ShiftMap turn{{1, 0}, {0, 0}, 0};
  const int turns = ((m.quarterTurns % 4) + 4) % 4;
  for (int i = 0; i < turns; ++i) g = composeShift(turn, g);
  std::size_t c = cornerImage(m, corner);
  ShiftMap move{{0, 1}, {cornerSign(c, 0) * m.dx, cornerSign(c, 1) * m.dy}, 0};
  move.minIndex = std::max<long>({0, -move.shift[0], -move.shift[1]});
  return composeShift(move, g);
}

}  // namespace mediankit
