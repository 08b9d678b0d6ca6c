#include "mediankit/boundary.hpp"

#include <algorithm>
#include <set>

#include "mediankit/errors.hpp"

namespace mediankit {

std::vector<std::size_t> Ubs::infiniteChains() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < parts.size(); ++c)
    if (parts[c] && parts[c]->infinite()) out.push_back(c);
  return out;
}

Ubs emptyUbs(const ChainSystem& S) { return Ubs{std::vector<std::optional<IndexInterval>>(S.chainCount())}; }

Ubs tail(const ChainSystem& S, std::size_t chain, long from) {
  Ubs u = emptyUbs(S);
  u.parts[chain] = IndexInterval{from, std::nullopt};
  return u;
}

Ubs unite(const Ubs& a, const Ubs& b) {
  Ubs out = a;
  for (std::size_t c = 0; c < b.parts.size(); ++c) {
    if (!b.parts[c]) continue;
    if (!out.parts[c]) {
      out.parts[c] = b.parts[c];
      continue;
    }
    auto& p = *out.parts[c];
    const auto& q = *b.parts[c];
    p.lo = std::min(p.lo, q.lo);
    if (!p.hi || !q.hi)
      p.hi.reset();
    else
      p.hi = std::max(*p.hi, *q.hi);
  }
  return out;
}

std::string describe(const ChainSystem& S, const Ubs& u) {
  std::string out;
  for (std::size_t c = 0; c < u.parts.size(); ++c) {
    if (!u.parts[c]) continue;
    if (!out.empty()) out += " ";
    const auto& p = *u.parts[c];
    out += S.chains[c].id + "[" + std::to_string(p.lo) + "," + (p.hi ? std::to_string(*p.hi) + "]" : "inf)");
  }
  return out.empty() ? "{}" : out;
}

Ubs inseparableClosure(const ChainSystem& S, const Ubs& seed) {
  const long s0 = S.stableIndex();
  const long d = S.offsetReach();
  long far = s0;
  for (const auto& p : seed.parts) {
    if (!p) continue;
    far = std::max(far, p->lo + d + 1);
    if (p->hi) far = std::max(far, *p->hi + d + 1);
  }
  far += d + 1;

  auto member = [&](ChainIndex z) {
    bool below = false, above = false;
    for (std::size_t j = 0; j < seed.parts.size() && !(below && above); ++j) {
      if (!seed.parts[j]) continue;
      const auto& p = *seed.parts[j];
      if (j == z.chain) {
        if (!p.hi || *p.hi >= z.index) below = true;
        if (p.lo <= z.index) above = true;
        continue;
      }
      long n = p.hi ? *p.hi : std::max({p.lo, s0, z.index + d + 1});
      if (!below && S.leq({j, n}, z)) below = true;
      if (!above && S.leq(z, {j, p.lo})) above = true;
    }
    return below && above;
  };

  Ubs out = emptyUbs(S);
  for (std::size_t c = 0; c < S.chainCount(); ++c) {
    std::optional<long> first, last;
    for (long n = 0; n <= far; ++n) {
      if (!member({c, n})) continue;
      if (last && *last != n - 1)
        throw Error(ErrorCode::InvalidInput, "closure is not convex on chain " + S.chains[c].id);
      if (!first) first = n;
      last = n;
    }
    if (!first) continue;
    if (*last == far)
      out.parts[c] = IndexInterval{*first, std::nullopt};
    else
      out.parts[c] = IndexInterval{*first, *last};
  }
  return out;
}

namespace {

// Weight of the indices in a but not in b on one chain; a must not be an
// infinite set outside an infinite b.
Rational differenceMeasure(const ChainSystem& S, std::size_t c, const std::optional<IndexInterval>& a,
                           const std::optional<IndexInterval>& b) {
  Rational sum(0);
  if (!a) return sum;
  long hi;
  if (a->hi)
    hi = *a->hi;
  else if (b && b->infinite())
    hi = std::max(a->lo, b->lo) - 1;
  else
    throw Error(ErrorCode::InvalidInput, "infinite difference");
  for (long n = a->lo; n <= hi; ++n)
    if (!(b && b->contains(n))) sum += S.weight({c, n});
  return sum;
}

std::optional<IndexInterval> intersect(const std::optional<IndexInterval>& a, const std::optional<IndexInterval>& b) {
  if (!a || !b) return std::nullopt;
  IndexInterval r{std::max(a->lo, b->lo), std::nullopt};
  if (a->hi && b->hi)
    r.hi = std::min(*a->hi, *b->hi);
  else if (a->hi)
    r.hi = a->hi;
  else if (b->hi)
    r.hi = b->hi;
  if (r.hi && *r.hi < r.lo) return std::nullopt;
  return r;
}

}  // namespace

Containment almostContained(const ChainSystem& S, const Ubs& a, const Ubs& b) {
  Containment res;
  Rational sum(0);
  for (std::size_t c = 0; c < a.parts.size(); ++c) {
    bool aInf = a.parts[c] && a.parts[c]->infinite();
    bool bInf = b.parts[c] && b.parts[c]->infinite();
    if (aInf && !bInf) return res;
    sum += differenceMeasure(S, c, a.parts[c], b.parts[c]);
  }
  res.contained = true;
  res.differenceMeasure = sum;
  return res;
}

bool equivalent(const ChainSystem& S, const Ubs& a, const Ubs& b) {
  return almostContained(S, a, b).contained && almostContained(S, b, a).contained;
}

bool almostDisjoint(const ChainSystem&, const Ubs& a, const Ubs& b) {
  for (std::size_t c = 0; c < a.parts.size(); ++c) {
    auto i = intersect(a.parts[c], b.parts[c]);
    if (i && i->infinite()) return false;
  }
  return true;
}

std::optional<Rational> intersectionReach(const ChainSystem& S, const Ubs& a, const Ubs& b) {
  Rational best(0);
  for (std::size_t c = 0; c < a.parts.size(); ++c) {
    auto i = intersect(a.parts[c], b.parts[c]);
    if (!i) continue;
    if (i->infinite()) return std::nullopt;
    Rational run(0);
    for (long n = 0; n <= *i->hi; ++n) run += S.weight({c, n});
    best = std::max(best, run);
  }
  return best;
}

std::vector<std::vector<std::size_t>> minChainCover(std::size_t n,
                                                    const std::function<bool(std::size_t, std::size_t)>& less) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && less(u, v)) adj[u].push_back(v);
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> matchRight(n, none), matchLeft(n, none);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (auto v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (matchRight[v] == none || augment(matchRight[v])) {
        matchRight[v] = u;
        matchLeft[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    augment(u);
  }
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t s = 0; s < n; ++s) {
    if (matchRight[s] != none) continue;
    std::vector<std::size_t> chain;
    for (std::size_t u = s; u != none; u = matchLeft[u]) chain.push_back(u);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<std::vector<ChainIndex>> dilworthChains(const ChainSystem& S, const std::vector<ChainIndex>& D) {
  auto cover = minChainCover(D.size(), [&](std::size_t a, std::size_t b) { return !(D[a] == D[b]) && S.leq(D[b], D[a]); });
  std::vector<std::vector<ChainIndex>> out;
  for (const auto& c : cover) {
    std::vector<ChainIndex> chain;
    for (auto i : c) chain.push_back(D[i]);
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<ChainIndex> members(const Ubs& u) {
  std::vector<ChainIndex> out;
  for (std::size_t c = 0; c < u.parts.size(); ++c) {
    if (!u.parts[c]) continue;
    if (u.parts[c]->infinite()) throw Error(ErrorCode::InvalidInput, "set is infinite");
    for (long n = u.parts[c]->lo; n <= *u.parts[c]->hi; ++n) out.push_back({c, n});
  }
  return out;
}

MinimalTail minimalTail(const ChainSystem& S, std::size_t chain) {
  const long horizon = S.searchHorizon();
  std::vector<std::vector<std::size_t>> cls;
  std::vector<Ubs> closures;
  for (long n = 0; n <= horizon; ++n) {
    closures.push_back(inseparableClosure(S, tail(S, chain, n)));
    cls.push_back(closures.back().infiniteChains());
  }
  if (cls[horizon] != cls[horizon - 1])
    throw Error(ErrorCode::HorizonExceeded, "tail classes of chain " + S.chains[chain].id + " still shrinking");
  long n = horizon;
  while (n > 0 && cls[n - 1] == cls[horizon]) --n;
  return {n, closures[n]};
}

bool UbsGraph::hasEdge(std::size_t u, std::size_t v) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

bool almostTransverse(const ChainSystem& S, std::size_t i, std::size_t j) {
  const long m = S.stableIndex();
  return S.rel({i, m}, {j, m + S.offsetReach() + 1}) == Rel::Transverse;
}

UbsGraph ubsGraph(const ChainSystem& S) {
  const std::size_t k = S.chainCount();
  std::vector<MinimalTail> tails;
  std::vector<std::vector<std::size_t>> stable;
  for (std::size_t i = 0; i < k; ++i) {
    tails.push_back(minimalTail(S, i));
    stable.push_back(tails.back().ubs.infiniteChains());
  }
  auto strictlyInside = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  UbsGraph G;
  for (std::size_t i = 0; i < k; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < k && minimal; ++j)
      if (strictlyInside(stable[j], stable[i])) minimal = false;
    if (!minimal) continue;
    if (std::find(G.classes.begin(), G.classes.end(), stable[i]) != G.classes.end()) continue;
    G.classes.push_back(stable[i]);
    G.representativeChain.push_back(i);
    G.representatives.push_back(tails[i].ubs);
  }
  const std::size_t nv = G.classes.size();
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v) {
      if (u == v) continue;
      std::size_t a = G.representativeChain[u], b = G.representativeChain[v];
      if (almostTransverse(S, a, b) && !almostTransverse(S, b, a)) G.edges.push_back({u, v});
    }

  std::vector<std::vector<char>> reach(nv, std::vector<char>(nv, 0));
  for (auto [u, v] : G.edges) reach[u][v] = 1;
  for (std::size_t w = 0; w < nv; ++w)
    for (std::size_t u = 0; u < nv; ++u)
      for (std::size_t v = 0; v < nv; ++v)
        if (reach[u][w] && reach[w][v]) reach[u][v] = 1;
  G.acyclic = true;
  G.reachabilityGivesEdge = true;
  for (std::size_t u = 0; u < nv; ++u) {
    if (reach[u][u]) G.acyclic = false;
    for (std::size_t v = 0; v < nv; ++v)
      if (u != v && reach[u][v] && !G.hasEdge(u, v)) G.reachabilityGivesEdge = false;
  }

  auto elems = truncation(S, S.searchHorizon() + S.offsetReach());
  G.rankProxy = minChainCover(elems.size(), [&](std::size_t a, std::size_t b) {
                  return a != b && S.leq(elems[b], elems[a]);
                }).size();
  return G;
}

std::vector<std::size_t> minimalClassesBelow(const UbsGraph& G, const Ubs& u) {
  auto inf = u.infiniteChains();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < G.classes.size(); ++v)
    if (std::includes(inf.begin(), inf.end(), G.classes[v].begin(), G.classes[v].end())) out.push_back(v);
  return out;
}

std::vector<PosetElement> ubsPoset(const ChainSystem& S) {
  UbsGraph G = ubsGraph(S);
  const std::size_t nv = G.classes.size();
  if (nv > enumerationCap()) throw Error(ErrorCode::WallBudgetExceeded, "too many vertices");
  std::vector<std::vector<char>> reach(nv, std::vector<char>(nv, 0));
  for (auto [u, v] : G.edges) reach[u][v] = 1;
  for (std::size_t w = 0; w < nv; ++w)
    for (std::size_t u = 0; u < nv; ++u)
      for (std::size_t v = 0; v < nv; ++v)
        if (reach[u][w] && reach[w][v]) reach[u][v] = 1;

  std::vector<std::size_t> start;
  for (std::size_t v = 0; v < nv; ++v) start.push_back(minimalTail(S, G.representativeChain[v]).index);

  std::vector<PosetElement> out;
  const long horizon = S.searchHorizon();
  for (std::size_t mask = 1; mask < (std::size_t(1) << nv); ++mask) {
    std::vector<std::size_t> W;
    for (std::size_t v = 0; v < nv; ++v)
      if (mask >> v & 1) W.push_back(v);
    bool inseparable = true;
    for (auto a : W)
      for (auto b : W)
        for (std::size_t m = 0; m < nv; ++m)
          if (!(mask >> m & 1) && reach[a][m] && reach[m][b]) inseparable = false;
    if (!inseparable) continue;
    std::optional<Ubs> rep;
    for (long n = 0; n <= horizon && !rep; ++n) {
      Ubs seed = emptyUbs(S);
      for (auto v : W)
        seed = unite(seed, tail(S, G.representativeChain[v], std::max<long>(n, static_cast<long>(start[v]))));
      Ubs cl = inseparableClosure(S, seed);
      if (minimalClassesBelow(G, cl) == W) rep = cl;
    }
    if (!rep) throw Error(ErrorCode::HorizonExceeded, "no representative found for a vertex set");
    out.push_back({W, *rep});
  }
  std::stable_sort(out.begin(), out.end(), [](const PosetElement& a, const PosetElement& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

Rational transferCharacter(const ChainSystem& S, const Ubs& omega, const ShiftMap& g) {
  const std::size_t k = S.chainCount();
  long cutoff = g.minIndex;
  long spread = 0;
  for (auto s : g.shift) spread = std::max(spread, std::abs(s));
  cutoff += spread;
  // an equivalent set on which g^-1 is fully defined
  Ubs trimmed = emptyUbs(S);
  for (std::size_t c = 0; c < k; ++c)
    trimmed.parts[c] = intersect(omega.parts[c], IndexInterval{cutoff, std::nullopt});
  Ubs pre = emptyUbs(S);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = trimmed.parts[g.tau[i]];
    if (!p) continue;
    IndexInterval q{p->lo - g.shift[i], std::nullopt};
    if (p->hi) q.hi = *p->hi - g.shift[i];
    pre.parts[i] = q;
  }
  if (pre.infiniteChains() != trimmed.infiniteChains())
    throw Error(ErrorCode::ClassNotPreserved, "g does not preserve the class of " + describe(S, omega));
  Rational chi(0);
  for (std::size_t c = 0; c < k; ++c) {
    chi += differenceMeasure(S, c, pre.parts[c], trimmed.parts[c]);
    chi -= differenceMeasure(S, c, trimmed.parts[c], pre.parts[c]);
  }
  return chi;
}

std::vector<Rational> chiVector(const ChainSystem& S, const ShiftMap& g) {
  UbsGraph G = ubsGraph(S);
  std::vector<Rational> out;
  for (std::size_t v = 0; v < G.classes.size(); ++v) {
    std::vector<std::size_t> preimage;
    for (std::size_t i = 0; i < S.chainCount(); ++i)
      if (std::find(G.classes[v].begin(), G.classes[v].end(), g.tau[i]) != G.classes[v].end())
        preimage.push_back(i);
    if (preimage != G.classes[v])
      throw Error(ErrorCode::ClassPermuted, "g moves the class of chain " + S.chains[G.representativeChain[v]].id);
    out.push_back(transferCharacter(S, G.representatives[v], g));
  }
  return out;
}

bool inKernel(const ChainSystem& S, const ShiftMap& g) {
  for (const auto& x : chiVector(S, g))
    if (x != Rational(0)) return false;
  return true;
}

}  // namespace mediankit
