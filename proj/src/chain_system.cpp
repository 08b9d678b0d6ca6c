#include "mediankit/chain_system.hpp"

#include <numeric>

#include "mediankit/errors.hpp"

namespace mediankit {

std::string relName(Rel r) {
  switch (r) {
    case Rel::Sub: return "sub";
    case Rel::Sup: return "sup";
    case Rel::Transverse: return "transverse";
  }
  return "transverse";
}

Rel parseRel(const std::string& s) {
  if (s == "sub") return Rel::Sub;
  if (s == "sup") return Rel::Sup;
  if (s == "transverse") return Rel::Transverse;
  throw Error(ErrorCode::InvalidInput, "unknown relation '" + s + "'");
}

Rel invert(Rel r) {
  if (r == Rel::Sub) return Rel::Sup;
  if (r == Rel::Sup) return Rel::Sub;
  return r;
}

std::optional<std::size_t> ChainSystem::findChain(const std::string& id) const {
  for (std::size_t i = 0; i < chains.size(); ++i)
    if (chains[i].id == id) return i;
  return std::nullopt;
}

std::size_t ChainSystem::chainAt(const std::string& id) const {
  auto i = findChain(id);
  if (!i) throw Error(ErrorCode::InvalidInput, "unknown chain '" + id + "'");
  return *i;
}

std::optional<Rel> ChainSystem::lookupDirected(ChainIndex a, ChainIndex b) const {
  if (a.chain == b.chain) {
    if (a.index == b.index) return std::nullopt;
    return a.index < b.index ? Rel::Sup : Rel::Sub;
  }
  for (const auto& e : head)
    if (e.from == a.chain && e.fromIndex == a.index && e.to == b.chain && e.toIndex == b.index)
      return e.rel;
  for (const auto& r : rules)
    if (r.from == a.chain && r.to == b.chain && r.offset.contains(b.index - a.index) &&
        r.fromIndex.contains(a.index) && r.toIndex.contains(b.index))
      return r.rel;
  return std::nullopt;
}

std::optional<Rel> ChainSystem::lookup(ChainIndex a, ChainIndex b) const {
  if (auto r = lookupDirected(a, b)) return r;
  if (auto r = lookupDirected(b, a)) return invert(*r);
  return std::nullopt;
}

Rel ChainSystem::rel(ChainIndex a, ChainIndex b) const {
  auto r = lookup(a, b);
  if (!r) throw Error(ErrorCode::InvalidInput, "no relation between " + name(a) + " and " + name(b));
  return *r;
}

Rational ChainSystem::weight(ChainIndex a) const {
  const Chain& c = chains[a.chain];
  auto n = static_cast<std::size_t>(a.index);
  if (n < c.headWeights.size()) return c.headWeights[n];
  return c.weights[(n - c.headWeights.size()) % c.weights.size()];
}

bool ChainSystem::leq(ChainIndex a, ChainIndex b) const {
  if (a == b) return true;
  auto r = lookup(a, b);
  return r && *r == Rel::Sub;
}

long ChainSystem::stableIndex() const {
  long s = 0;
  auto bump = [&](long v) { s = std::max(s, v); };
  for (const auto& c : chains) bump(static_cast<long>(c.headWeights.size()));
  for (const auto& e : head) {
    bump(e.fromIndex + 1);
    bump(e.toIndex + 1);
  }
  for (const auto& r : rules)
    for (const Range* rg : {&r.fromIndex, &r.toIndex}) {
      if (rg->lo) bump(*rg->lo + 1);
      if (rg->hi) bump(*rg->hi + 1);
    }
  return s;
}

long ChainSystem::offsetReach() const {
  long d = 0;
  for (const auto& r : rules) {
    if (r.offset.lo) d = std::max(d, std::abs(*r.offset.lo));
    if (r.offset.hi) d = std::max(d, std::abs(*r.offset.hi));
  }
  return d + 1;
}

long ChainSystem::weightPeriod() const {
  long p = 1;
  for (const auto& c : chains) p = std::lcm(p, static_cast<long>(c.weights.size()));
  return p;
}

long ChainSystem::searchHorizon() const { return stableIndex() + offsetReach() + 2 * weightPeriod(); }

std::string ChainSystem::name(ChainIndex a) const {
  return chains[a.chain].id + "_" + std::to_string(a.index);
}

std::vector<ChainIndex> truncation(const ChainSystem& S, long length) {
  std::vector<ChainIndex> out;
  for (std::size_t c = 0; c < S.chainCount(); ++c)
    for (long n = 0; n < length; ++n) out.push_back({c, n});
  return out;
}

ValidationReport validateSystem(const ChainSystem& S) {
  ValidationReport rep;
  auto bad = [&](const std::string& kind, const std::string& detail) { rep.violations.push_back({kind, detail}); };
  if (S.chains.empty()) bad("no chains", "");
  for (std::size_t i = 0; i < S.chainCount(); ++i) {
    const auto& c = S.chains[i];
    if (c.weights.empty()) bad("empty weight period", c.id);
    for (const auto* ws : {&c.headWeights, &c.weights})
      for (const auto& w : *ws)
        if (w <= Rational(0)) bad("nonpositive weight", c.id);
    for (std::size_t j = 0; j < i; ++j)
      if (S.chains[j].id == c.id) bad("duplicate chain id", c.id);
  }
  for (const auto& r : S.rules)
    if (r.from == r.to || r.from >= S.chainCount() || r.to >= S.chainCount())
      bad("rule must relate two different chains", "");
  for (const auto& e : S.head)
    if (e.from == e.to || e.from >= S.chainCount() || e.to >= S.chainCount() || e.fromIndex < 0 ||
        e.toIndex < 0)
      bad("bad exceptional entry", "");
  if (!rep.ok()) return rep;

  // two weight periods past the head and the offset reach on both sides
  const long len = S.stableIndex() + 2 * (S.offsetReach() + S.weightPeriod()) + 2;
  auto elems = truncation(S, len);
  const std::size_t n = elems.size();
  std::vector<std::vector<char>> sub(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) {
        sub[a][b] = 1;
        continue;
      }
      auto f = S.lookupDirected(elems[a], elems[b]);
      auto r = S.lookupDirected(elems[b], elems[a]);
      if (!f && !r) {
        bad("relation undefined", S.name(elems[a]) + " vs " + S.name(elems[b]));
        continue;
      }
      if (f && r && *f != invert(*r))
        bad("antisymmetry", S.name(elems[a]) + " vs " + S.name(elems[b]));
      Rel x = f ? *f : invert(*r);
      sub[a][b] = x == Rel::Sub;
    }
  if (!rep.ok()) return rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !sub[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (sub[b][c] && !sub[a][c]) {
          bad("nesting not transitive", S.name(elems[a]) + " < " + S.name(elems[b]) + " < " + S.name(elems[c]));
          return rep;
        }
    }
  return rep;
}

ShiftMap identityShift(const ChainSystem& S) {
  ShiftMap g;
  for (std::size_t i = 0; i < S.chainCount(); ++i) {
    g.tau.push_back(i);
    g.shift.push_back(0);
  }
  return g;
}

ShiftMap composeShift(const ShiftMap& g, const ShiftMap& h) {
  ShiftMap out;
  out.minIndex = h.minIndex;
  for (std::size_t i = 0; i < h.tau.size(); ++i) {
    out.tau.push_back(g.tau[h.tau[i]]);
    out.shift.push_back(h.shift[i] + g.shift[h.tau[i]]);
    out.minIndex = std::max(out.minIndex, g.minIndex - h.shift[i]);
  }
  return out;
}

ValidationReport validateShift(const ChainSystem& from, const ChainSystem& to, const ShiftMap& g) {
  ValidationReport rep;
  const std::size_t k = from.chainCount();
  if (g.tau.size() != k || g.shift.size() != k || to.chainCount() != k) {
    rep.violations.push_back({"shift map has the wrong size", ""});
    return rep;
  }
  std::vector<char> hit(k, 0);
  for (auto t : g.tau) {
    if (t >= k || hit[t]) {
      rep.violations.push_back({"chain map is not a permutation", ""});
      return rep;
    }
    hit[t] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (g.minIndex + g.shift[i] < 0) rep.violations.push_back({"shift leaves the chain", from.chains[i].id});
  if (!rep.ok()) return rep;
  const long block = std::max(from.searchHorizon(), to.searchHorizon()) + from.offsetReach() + to.offsetReach();
  for (std::size_t i = 0; i < k; ++i)
    for (long n = g.minIndex; n < g.minIndex + block; ++n) {
      ChainIndex a{i, n};
      if (from.weight(a) != to.weight(g.apply(a)))
        rep.violations.push_back({"weight not preserved", from.name(a)});
      for (std::size_t j = 0; j < k; ++j)
        for (long m = g.minIndex; m < g.minIndex + block; ++m) {
          ChainIndex b{j, m};
          if (a == b) continue;
          auto r1 = from.lookup(a, b);
          auto r2 = to.lookup(g.apply(a), g.apply(b));
          if (r1 != r2) {
            rep.violations.push_back({"relation not preserved", from.name(a) + " vs " + from.name(b)});
            return rep;
          }
        }
    }
  return rep;
}

}  // namespace mediankit
