#include "mediankit/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"

namespace mediankit {

bool transverse(const Pocset& P, std::size_t h, std::size_t k) {
  if (P.wallOf(h) == P.wallOf(k)) return false;
  for (std::size_t a : {h, P.star(h)})
    for (std::size_t b : {k, P.star(k)})
      if (P.comparable(a, b)) return false;
  return true;
}

namespace {

bool wallsTransverse(const Pocset& P, std::size_t v, std::size_t w) {
  return transverse(P, P.wall(v).pos, P.wall(w).pos);
}

}  // namespace

RankResult rankWithClique(const Pocset& P) {
  RankResult res;
  const std::size_t m = P.wallCount();
  if (m == 0) return res;
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w)
      if (v != w && wallsTransverse(P, v, w)) adj[v][w] = true;
    if (std::find(adj[v].begin(), adj[v].end(), true) != adj[v].end()) active.push_back(v);
  }
  res.rank = 1;
  res.walls = {0};
  if (active.empty()) return res;
  if (active.size() > 64)
    throw Error(ErrorCode::WallBudgetExceeded,
                std::to_string(active.size()) + " mutually crossing walls exceed the clique cap 64");
  const std::size_t n = active.size();
  std::vector<std::uint64_t> nbr(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[active[i]][active[j]]) nbr[i] |= std::uint64_t(1) << j;
  std::vector<std::size_t> cur, best;
  // Depth-first in lexicographic order; a clique only replaces the best one
  // when strictly larger, so the first maximum found is the least one.
  auto search = [&](auto&& self, std::uint64_t cand) -> void {
    if (cur.size() > best.size()) best = cur;
    while (cand) {
      if (cur.size() + static_cast<std::size_t>(std::popcount(cand)) <= best.size()) return;
      std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      cur.push_back(v);
      self(self, cand & nbr[v]);
      cur.pop_back();
    }
  };
  search(search, n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1));
  if (best.size() >= 2) {
    res.rank = best.size();
    res.walls.clear();
    for (std::size_t i : best) res.walls.push_back(active[i]);
  }
  return res;
}

std::size_t rank(const Pocset& P) { return rankWithClique(P).rank; }

Pocset restrictToWalls(const Pocset& P, const std::vector<std::size_t>& walls) {
  PocsetBuilder b;
  std::vector<std::size_t> hs;
  for (std::size_t w : walls) {
    const Wall& wl = P.wall(w);
    b.addWall(wl.id, P.name(wl.pos), P.name(wl.neg), wl.weight);
    hs.push_back(wl.pos);
    hs.push_back(wl.neg);
  }
  for (std::size_t h : hs)
    for (std::size_t k : hs)
      if (h != k && P.leq(h, k)) b.addOrder(P.name(h), P.name(k));
  return b.build();
}

Decomposition decompose(const Pocset& P) {
  const std::size_t m = P.wallCount();
  std::vector<std::size_t> comp(m, m);
  Decomposition D;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] != m) continue;
    std::size_t id = D.factorWalls.size();
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < m; ++w)
        if (comp[w] == m && w != v && !wallsTransverse(P, v, w)) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    D.factorWalls.push_back(members);
  }
  D.assignment.assign(P.size(), {0, 0});
  for (std::size_t f = 0; f < D.factorWalls.size(); ++f) {
    D.factors.push_back(restrictToWalls(P, D.factorWalls[f]));
    const Pocset& F = D.factors.back();
    for (std::size_t w : D.factorWalls[f])
      for (std::size_t h : {P.wall(w).pos, P.wall(w).neg}) D.assignment[h] = {f, F.at(P.name(h))};
  }
  return D;
}

Pocset product(const Pocset& A, const Pocset& B, const std::string& prefixA,
               const std::string& prefixB) {
  PocsetBuilder b;
  for (const auto& w : A.walls())
    b.addWall(prefixA + w.id, prefixA + A.name(w.pos), prefixA + A.name(w.neg), w.weight);
  for (const auto& w : B.walls())
    b.addWall(prefixB + w.id, prefixB + B.name(w.pos), prefixB + B.name(w.neg), w.weight);
  for (std::size_t h = 0; h < A.size(); ++h)
    for (std::size_t k = 0; k < A.size(); ++k)
      if (A.less(h, k)) b.addOrder(prefixA + A.name(h), prefixA + A.name(k));
  for (std::size_t h = 0; h < B.size(); ++h)
    for (std::size_t k = 0; k < B.size(); ++k)
      if (B.less(h, k)) b.addOrder(prefixB + B.name(h), prefixB + B.name(k));
  return b.build();
}

Point projectToFactor(const Decomposition& D, std::size_t factor, const Point& x) {
  Point out(D.factors[factor].size());
  for (auto h = x.find_first(); h != Bits::npos; h = x.find_next(h))
    if (D.assignment[h].first == factor) out.set(D.assignment[h].second);
  return out;
}

Automorphism identity(const Pocset& P) {
  Automorphism g{"id", std::vector<std::size_t>(P.size())};
  std::iota(g.map.begin(), g.map.end(), std::size_t(0));
  return g;
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
  Automorphism out{g.name + "*" + h.name, std::vector<std::size_t>(h.map.size())};
  for (std::size_t i = 0; i < h.map.size(); ++i) out.map[i] = g.map[h.map[i]];
  return out;
}

Automorphism inverse(const Automorphism& g) {
  Automorphism out{g.name + "^-1", std::vector<std::size_t>(g.map.size())};
  for (std::size_t i = 0; i < g.map.size(); ++i) out.map[g.map[i]] = i;
  return out;
}

bool sameMap(const Automorphism& g, const Automorphism& h) { return g.map == h.map; }

bool isAutomorphism(const Pocset& P, const std::vector<std::size_t>& map) {
  const std::size_t n = P.size();
  if (map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t h = 0; h < n; ++h) {
    if (map[h] >= n || hit[map[h]]) return false;
    hit[map[h]] = true;
  }
  for (std::size_t h = 0; h < n; ++h) {
    if (map[P.star(h)] != P.star(map[h])) return false;
    if (P.weightOf(h) != P.weightOf(map[h])) return false;
    for (std::size_t k = 0; k < n; ++k)
      if (P.leq(h, k) != P.leq(map[h], map[k])) return false;
  }
  return true;
}

Point applyToPoint(const Automorphism& g, const Point& x) { return applyToSet(g, x); }

Bits applyToSet(const Automorphism& g, const Bits& s) {
  Bits out(s.size());
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) out.set(g.map[h]);
  return out;
}

std::vector<Automorphism> automorphisms(const Pocset& P) {
  const std::size_t m = P.wallCount();
  if (m > enumerationCap())
    throw Error(ErrorCode::WallBudgetExceeded,
                std::to_string(m) + " walls exceed the enumeration cap " +
                    std::to_string(enumerationCap()));
  const std::size_t n = P.size();
  std::vector<std::size_t> upCount(n), downCount(n);
  for (std::size_t h = 0; h < n; ++h) {
    upCount[h] = P.up(h).count();
    downCount[h] = P.down(h).count();
  }
  std::vector<Automorphism> out;
  std::vector<std::size_t> map(n, n);
  std::vector<bool> usedWall(m, false);
  std::vector<std::size_t> assigned;
  auto fits = [&](std::size_t h, std::size_t t) {
    if (upCount[h] != upCount[t] || downCount[h] != downCount[t]) return false;
    for (std::size_t a : assigned) {
      if (P.leq(a, h) != P.leq(map[a], t)) return false;
      if (P.leq(h, a) != P.leq(t, map[a])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t w) -> void {
    if (w == m) {
      out.push_back({"aut" + std::to_string(out.size()), map});
      return;
    }
    const Wall& wl = P.wall(w);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t tw = P.wallOf(t);
      if (usedWall[tw] || P.wall(tw).weight != wl.weight) continue;
      if (!fits(wl.pos, t) || !fits(wl.neg, P.star(t))) continue;
      map[wl.pos] = t;
      map[wl.neg] = P.star(t);
      assigned.push_back(wl.pos);
      assigned.push_back(wl.neg);
      usedWall[tw] = true;
      self(self, w + 1);
      usedWall[tw] = false;
      assigned.pop_back();
      assigned.pop_back();
      map[wl.pos] = map[wl.neg] = n;
    }
  };
  search(search, 0);
  if (!out.empty()) out.front().name = "id";
  return out;
}

std::vector<std::size_t> factorPermutation(const Pocset& P, const Decomposition& D,
                                           const Automorphism& g) {
  if (!isAutomorphism(P, g.map))
    throw Error(ErrorCode::NotAnAutomorphism, "map '" + g.name + "' is not an automorphism");
  std::vector<std::size_t> perm(D.factorWalls.size());
  for (std::size_t f = 0; f < D.factorWalls.size(); ++f) {
    std::size_t target = D.assignment[g.map[P.wall(D.factorWalls[f].front()).pos]].first;
    for (std::size_t w : D.factorWalls[f])
      if (D.assignment[g.map[P.wall(w).pos]].first != target)
        throw Error(ErrorCode::NotAnAutomorphism, "map '" + g.name + "' splits a factor");
    perm[f] = target;
  }
  return perm;
}

}  // namespace mediankit
