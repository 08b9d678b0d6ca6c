#include "mediankit/subdivision.hpp"

#include <algorithm>

#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"

namespace mediankit {

Point Subdivision::embed(const Point& x) const {
  Point out(child.size());
  for (auto h = x.find_first(); h != Bits::npos; h = x.find_next(h)) {
    out.set(minus[h]);
    out.set(plus[h]);
  }
  return out;
}

Bits Subdivision::project(const Bits& s) const {
  Bits out(parent.size());
  for (auto j = s.find_first(); j != Bits::npos; j = s.find_next(j)) out.set(projection[j]);
  return out;
}

Subdivision subdivide(const Pocset& P) {
  Subdivision S;
  S.parent = P;
  PocsetBuilder b;
  for (const auto& w : P.walls()) {
    const std::string& p = P.name(w.pos);
    const std::string& n = P.name(w.neg);
    Rational half = w.weight / 2;
    // (a-)* = (a*)+ and (a+)* = (a*)-
    b.addWall(w.id + "-", p + "-", n + "+", half);
    b.addWall(w.id + "+", p + "+", n + "-", half);
  }
  const std::size_t n = P.size();
  S.minus.resize(n);
  S.plus.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    S.minus[a] = b.halfspace(P.name(a) + "-");
    S.plus[a] = b.halfspace(P.name(a) + "+");
  }
  S.projection.assign(b.size(), 0);
  for (std::size_t a = 0; a < n; ++a) {
    S.projection[S.minus[a]] = a;
    S.projection[S.plus[a]] = a;
    b.addOrder(S.minus[a], S.plus[a]);
    for (std::size_t c = 0; c < n; ++c) {
      if (!P.less(a, c)) continue;
      for (std::size_t j : {S.minus[a], S.plus[a]})
        for (std::size_t k : {S.minus[c], S.plus[c]}) b.addOrder(j, k);
    }
  }
  S.child = b.build();
  return S;
}

Automorphism lift(const Subdivision& S, const Automorphism& g) {
  if (!isAutomorphism(S.parent, g.map))
    throw Error(ErrorCode::NotAnAutomorphism, "map '" + g.name + "' is not an automorphism");
  Automorphism out{g.name + "'", std::vector<std::size_t>(S.child.size())};
  for (std::size_t a = 0; a < S.parent.size(); ++a) {
    out.map[S.minus[a]] = S.minus[g.map[a]];
    out.map[S.plus[a]] = S.plus[g.map[a]];
  }
  return out;
}

bool isNewPoint(const Subdivision& S, const Point& x) {
  for (std::size_t a = 0; a < S.parent.size(); ++a)
    if (x[S.plus[a]] && x[S.plus[S.parent.star(a)]]) return true;
  return false;
}

CubeAt cubeAt(const Subdivision& S, const Point& x) {
  const Pocset& P = S.parent;
  if (!isUltrafilter(S.child, x)) throw Error(ErrorCode::InvalidInput, "not a point of the subdivision");
  CubeAt c;
  for (const auto& w : P.walls())
    if (x[S.plus[w.pos]] && x[S.plus[w.neg]]) c.halfspaces.push_back(w.pos);
  c.k = c.halfspaces.size();
  if (c.k == 0) throw Error(ErrorCode::NotANewPoint, "point lies in the image of the parent");
  Bits q = S.project(x);
  for (std::size_t a : c.halfspaces) q.reset(P.star(a));
  if (!isUltrafilter(P, q)) throw Error(ErrorCode::InvalidInput, "cube corner is not an ultrafilter");

  std::vector<int> u(c.k, -1);
  // odometer over {-1,0,1}^k in lexicographic order
  while (true) {
    Bits corner = q;
    bool hasZero = false;
    for (std::size_t i = 0; i < c.k; ++i) {
      if (u[i] == -1) {
        corner.reset(c.halfspaces[i]);
        corner.set(P.star(c.halfspaces[i]));
      }
      hasZero = hasZero || u[i] == 0;
    }
    Point lifted = S.embed(corner);
    for (std::size_t i = 0; i < c.k; ++i)
      if (u[i] == 0) {
        lifted.reset(S.minus[c.halfspaces[i]]);
        lifted.set(S.plus[P.star(c.halfspaces[i])]);
      }
    if (!isUltrafilter(S.child, lifted))
      throw Error(ErrorCode::InvalidInput, "cube vertex is not an ultrafilter");
    if (!hasZero) c.corners.push_back({u, corner});
    c.cube.push_back({u, lifted});
    std::size_t i = c.k;
    while (i > 0 && u[i - 1] == 1) u[--i] = -1;
    if (i == 0) break;
    ++u[i - 1];
  }
  return c;
}

Rational maxAtom(const Pocset& P) {
  Rational best(0);
  for (const auto& w : P.walls()) best = std::max(best, w.weight);
  return best;
}

std::vector<Subdivision> tower(const Pocset& P, std::size_t depth) {
  if (depth >= 60 || (P.wallCount() << depth) > kTowerWallCap)
    throw Error(ErrorCode::WallBudgetExceeded,
                "tower of depth " + std::to_string(depth) + " exceeds " +
                    std::to_string(kTowerWallCap) + " walls");
  std::vector<Subdivision> T;
  Subdivision base;
  base.parent = P;
  base.child = P;
  for (std::size_t h = 0; h < P.size(); ++h) {
    base.projection.push_back(h);
    base.minus.push_back(h);
    base.plus.push_back(h);
  }
  T.push_back(base);
  for (std::size_t i = 1; i <= depth; ++i) T.push_back(subdivide(T.back().child));
  return T;
}

Point embedInto(const std::vector<Subdivision>& T, std::size_t stage, const Point& x) {
  Point cur = x;
  for (std::size_t i = 1; i <= stage; ++i) cur = T[i].embed(cur);
  return cur;
}

}  // namespace mediankit
