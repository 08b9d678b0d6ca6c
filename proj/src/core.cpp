#include "mediankit/core.hpp"

#include <algorithm>
#include <sstream>

#include "mediankit/errors.hpp"

namespace mediankit {

ValidationReport validate(const Pocset& P) {
  ValidationReport rep;
  auto add = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  };
  const std::size_t n = P.size();
  for (std::size_t h = 0; h < n; ++h) {
    if (P.star(h) == h) add("fixed point of involution", P.name(h));
    if (P.star(P.star(h)) != h) add("star is not an involution", P.name(h));
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::size_t hs = P.star(h);
    if (hs != h && P.comparable(h, hs))
      add("comparable with complement", P.name(h) + " vs " + P.name(hs));
    for (std::size_t k = 0; k < n; ++k) {
      if (h == k || !P.leq(h, k)) continue;
      if (P.leq(k, h) && h < k) add("antisymmetry", P.name(h) + " <= " + P.name(k) + " <= " + P.name(h));
      if (!P.leq(P.star(k), P.star(h)))
        add("order not reversed by star", P.name(h) + " <= " + P.name(k));
    }
  }
  for (const auto& w : P.walls())
    if (w.weight <= Rational(0)) add("nonpositive weight", w.id + " = " + toString(w.weight));
  return rep;
}

bool isUltrafilter(const Pocset& P, const Bits& s) {
  if (s.size() != P.size()) return false;
  for (const auto& w : P.walls())
    if (s[w.pos] == s[w.neg]) return false;
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h))
    if (!P.up(h).is_subset_of(s)) return false;
  return true;
}

std::vector<Point> points(const Pocset& P) { return points(P, enumerationCap()); }

std::vector<Point> points(const Pocset& P, std::size_t wallCap) {
  if (P.wallCount() > wallCap)
    throw Error(ErrorCode::WallBudgetExceeded,
                std::to_string(P.wallCount()) + " walls exceed the enumeration cap " +
                    std::to_string(wallCap));
  std::vector<Point> out;
  const std::size_t m = P.wallCount();
  // Choosing a side of an undecided wall never conflicts in a valid pocset,
  // but the check is kept so invalid input cannot produce non-ultrafilters.
  auto recurse = [&](auto&& self, std::size_t w, const Bits& cur) -> void {
    while (w < m && (cur[P.wall(w).pos] || cur[P.wall(w).neg])) ++w;
    if (w == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t side : {P.wall(w).pos, P.wall(w).neg}) {
      Bits next = cur | P.up(side);
      bool ok = true;
      for (auto k = P.up(side).find_first(); k != Bits::npos; k = P.up(side).find_next(k))
        if (next[P.star(k)]) {
          ok = false;
          break;
        }
      if (ok) self(self, w + 1, next);
    }
  };
  recurse(recurse, 0, P.emptySet());
  return out;
}

Bits upClosure(const Pocset& P, const Bits& s) {
  Bits out = s;
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) out |= P.up(h);
  return out;
}

Point median(const Point& x, const Point& y, const Point& z) {
  return (x & y) | (y & z) | (z & x);
}

Rational measure(const Pocset& P, const Bits& halfspaces) {
  Rational total(0);
  for (auto h = halfspaces.find_first(); h != Bits::npos; h = halfspaces.find_next(h))
    total += P.weightOf(h);
  return total;
}

Rational distance(const Pocset& P, const Point& x, const Point& y) {
  Rational total(0);
  for (const auto& w : P.walls())
    if (x[w.pos] != y[w.pos]) total += w.weight;
  return total;
}

Bits sigmaOf(const Pocset& P, const std::vector<Point>& A) {
  if (A.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
  Bits s = A.front();
  for (const auto& a : A) s &= a;
  (void)P;
  return s;
}

Bits separating(const Pocset& P, const std::vector<Point>& A, const std::vector<Point>& B) {
  return sigmaOf(P, B) & P.starOf(sigmaOf(P, A));
}

Bits separating(const Pocset& P, const Point& x, const Point& y) {
  (void)P;
  return y - x;
}

bool inInterval(const Point& x, const Point& y, const Point& z) {
  return (x & y).is_subset_of(z);
}

std::vector<Point> interval(const std::vector<Point>& all, const Point& x, const Point& y) {
  std::vector<Point> out;
  for (const auto& z : all)
    if (inInterval(x, y, z)) out.push_back(z);
  return out;
}

std::vector<Point> interval(const Pocset& P, const Point& x, const Point& y) {
  return interval(points(P), x, y);
}

Point gateProject(const Pocset& P, const std::vector<Point>& C, const Point& x) {
  Bits sc = sigmaOf(P, C);
  Point g = P.emptySet();
  for (const auto& w : P.walls()) {
    if (sc[w.pos]) g.set(w.pos);
    else if (sc[w.neg]) g.set(w.neg);
    else g.set(x[w.pos] ? w.pos : w.neg);
  }
  return g;
}

std::vector<Point> pointsInside(const std::vector<Point>& all, const Bits& sigma) {
  std::vector<Point> out;
  for (const auto& z : all)
    if (sigma.is_subset_of(z)) out.push_back(z);
  return out;
}

ConvexSet convexHull(const Pocset& P, const std::vector<Point>& all, const std::vector<Point>& S) {
  ConvexSet c;
  c.sigma = sigmaOf(P, S);
  c.points = pointsInside(all, c.sigma);
  return c;
}

ConvexSet convexHull(const Pocset& P, const std::vector<Point>& S) {
  return convexHull(P, points(P), S);
}

bool isConvex(const Pocset& P, const std::vector<Point>& all, const std::vector<Point>& S) {
  if (S.empty()) return true;
  return convexHull(P, all, S).points.size() == S.size();
}

Bits inseparableClosure(const Pocset& P, const Bits& S) {
  Bits out = P.emptySet();
  for (auto h = S.find_first(); h != Bits::npos; h = S.find_next(h))
    for (auto k = S.find_first(); k != Bits::npos; k = S.find_next(k))
      if (P.leq(h, k)) out |= P.up(h) & P.down(k);
  return out;
}

bool containsPoint(const std::vector<Point>& set, const Point& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

std::vector<std::string> pointLabel(const Pocset& P, const Point& x) {
  std::vector<std::string> out;
  for (const auto& w : P.walls()) out.push_back(P.name(x[w.pos] ? w.pos : w.neg));
  return out;
}

Point parsePoint(const Pocset& P, const std::string& spec) {
  if (!spec.empty() && spec[0] == '#') {
    auto all = points(P);
    std::size_t i = 0;
    try {
      i = std::stoul(spec.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad point index '" + spec + "'");
    }
    if (i >= all.size()) throw Error(ErrorCode::InvalidInput, "point index out of range: " + spec);
    return all[i];
  }
  Bits s = P.emptySet();
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    s.set(P.at(item));
  }
  Bits u = upClosure(P, s);
  if (!isUltrafilter(P, u))
    throw Error(ErrorCode::InvalidInput, "'" + spec + "' does not determine a point");
  return u;
}

}  // namespace mediankit
