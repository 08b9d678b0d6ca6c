#include "mediankit/actions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mediankit/errors.hpp"
#include "mediankit/structure.hpp"

namespace mediankit {

namespace {

std::vector<std::size_t> mustEvaluate(const Action& A, const Word& g) {
  std::vector<std::size_t> out(A.pocset().size());
  for (std::size_t h = 0; h < out.size(); ++h) {
    auto t = A.apply(g, h);
    if (!t) throw Error(ErrorCode::OutOfWindow, "word " + A.format(g) + " leaves the window");
    out[h] = *t;
  }
  return out;
}

Point mustApplyPoint(const Action& A, const Word& g, const Point& x) {
  auto y = A.applyPoint(g, x);
  if (!y) throw Error(ErrorCode::OutOfWindow, "word " + A.format(g) + " moves the point out of the window");
  return *y;
}

// Elements of a total action's group with shortlex-least words.
std::vector<std::pair<Word, std::vector<std::size_t>>> groupElements(const Action& A) {
  std::vector<std::pair<Word, std::vector<std::size_t>>> out;
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::pair<Word, std::vector<std::size_t>>> queue;
  auto id = mustEvaluate(A, {});
  seen.insert(id);
  queue.push_back({{}, id});
  auto letters = A.alphabet();
  while (!queue.empty()) {
    auto [w, m] = queue.front();
    queue.pop_front();
    out.push_back({w, m});
    for (const auto& l : letters) {
      Word x = w;
      x.push_back(l);
      std::vector<std::size_t> img(m.size());
      // x acts as w after l
      for (std::size_t h = 0; h < m.size(); ++h) img[h] = m[*A.apply(l, h)];
      if (seen.insert(img).second) queue.push_back({x, img});
    }
  }
  return out;
}

Word subword(const Word& g, std::size_t from, std::size_t to) {
  return Word(g.begin() + static_cast<long>(from), g.begin() + static_cast<long>(to));
}

}  // namespace

std::vector<std::size_t> wallInversions(const Action& A, const Word& g) {
  const Pocset& P = A.pocset();
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < P.wallCount(); ++w) {
    std::size_t h = P.wall(w).pos;
    auto t = A.apply(g, h);
    if (!t) throw Error(ErrorCode::OutOfWindow, "word " + A.format(g) + " leaves the window");
    if (*t == P.star(h)) out.push_back(w);
  }
  return out;
}

std::vector<Point> orbit(const Action& A, const Point& x) {
  std::vector<Point> out{x};
  std::set<Point> seen{x};
  auto letters = A.alphabet();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& l : letters) {
      Point y = mustApplyPoint(A, {l}, out[i]);
      if (seen.insert(y).second) out.push_back(y);
      if (out.size() > (std::size_t(1) << 20))
        throw Error(ErrorCode::WallBudgetExceeded, "orbit too large");
    }
  }
  return out;
}

OrbitResult minOrbit(const Action& A) {
  if (!A.isTotal()) throw Error(ErrorCode::InvalidInput, "min_orbit needs a total action");
  const Pocset& P = A.pocset();
  OrbitResult best;
  std::set<Point> covered;
  for (const auto& x : points(P)) {
    if (covered.count(x)) continue;
    auto o = orbit(A, x);
    covered.insert(o.begin(), o.end());
    if (best.orbit.empty() || o.size() < best.orbit.size()) best.orbit = o;
  }
  best.size = best.orbit.size();
  std::size_t r = P.wallCount() == 0 ? 0 : rank(P);
  best.bound = r >= 63 ? static_cast<std::size_t>(-1) : (std::size_t(1) << r);
  return best;
}

NestedResult findNested(const Action& A, const Point& x, const Word& gIn) {
  const Pocset& P = A.pocset();
  Word g = freeReduce(gIn);
  std::size_t r = P.wallCount() == 0 ? 0 : rank(P);

  std::vector<Letter> used;
  for (const auto& l : g)
    if (std::find(used.begin(), used.end(), l) == used.end()) used.push_back(l);
  Rational sum(0);
  for (const auto& l : used) sum += distance(P, x, mustApplyPoint(A, {l}, x));
  Point gx = mustApplyPoint(A, g, x);
  NestedResult res;
  res.displacement = distance(P, x, gx);
  res.threshold = Rational(static_cast<long>(r)) * sum;
  if (!(res.displacement > res.threshold))
    throw Error(ErrorCode::DisplacementTooSmall,
                "d(x,gx) = " + toString(res.displacement) + " <= " + toString(res.threshold));

  const std::size_t n = g.size();
  // translates[j][h] = g_j h for h in U_j
  std::vector<std::map<std::size_t, std::size_t>> translates(n);
  std::vector<std::size_t> count(P.size(), 0);
  Point y = x;
  for (std::size_t j = 0; j < n; ++j) {
    Word prefix = subword(g, 0, j);
    Word next = subword(g, 0, j + 1);
    Point xNext = mustApplyPoint(A, next, x);
    Point yNext = median(y, gx, xNext);
    Bits step = separating(P, y, yNext);
    Word back = inverseWord(prefix);
    for (auto t = step.find_first(); t != Bits::npos; t = step.find_next(t)) {
      auto pre = A.apply(back, t);
      if (!pre) throw Error(ErrorCode::OutOfWindow, "translate leaves the window");
      translates[j][*pre] = t;
      ++count[*pre];
    }
    y = yNext;
  }

  bool sawUndefined = false;
  for (std::size_t h = 0; h < P.size(); ++h) {
    if (count[h] < r + 1) continue;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n && idx.size() < r + 1; ++j)
      if (translates[j].count(h)) idx.push_back(j);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        std::size_t ta = translates[idx[a]][h], tb = translates[idx[b]][h];
        Word middle = subword(g, idx[a], idx[b]);
        Word cand;
        if (P.less(ta, tb))
          cand = inverseWord(middle);
        else if (P.less(tb, ta))
          cand = middle;
        else
          continue;
        auto img = A.apply(cand, h);
        if (!img) {
          sawUndefined = true;
          continue;
        }
        if (P.less(*img, h)) {
          res.word = cand;
          res.halfspace = h;
          return res;
        }
      }
  }
  if (sawUndefined) throw Error(ErrorCode::OutOfWindow, "nested pair cannot be verified inside the window");
  throw Error(ErrorCode::DisplacementTooSmall, "no nested pair found");
}

FlipResult findFlip(const Action& A, std::size_t h, std::size_t maxLen) {
  const Pocset& P = A.pocset();
  const std::size_t hs = P.star(h);
  auto flips = [&](std::size_t t) { return P.leq(t, h) && t != h; };
  FlipResult res;
  if (A.isTotal()) {
    Bits sigma = P.emptySet();
    for (const auto& [w, m] : groupElements(A)) {
      if (flips(m[hs])) {
        res.kind = FlipKind::Flipped;
        res.word = w;
        return res;
      }
      sigma.set(m[hs]);
    }
    res.kind = FlipKind::InvariantSet;
    res.invariantSigma = upClosure(P, sigma);
    if (P.wallCount() <= enumerationCap())
      res.invariantPoints = pointsInside(points(P), res.invariantSigma);
    return res;
  }
  for (std::size_t len = 1; len <= maxLen; ++len)
    for (const auto& w : A.reducedWords(len)) {
      auto t = A.apply(w, hs);
      if (!t) {
        ++res.skippedWords;
        continue;
      }
      if (flips(*t)) {
        res.kind = FlipKind::Flipped;
        res.word = w;
        return res;
      }
    }
  res.kind = FlipKind::Inconclusive;
  res.maxLength = maxLen;
  return res;
}

std::optional<Word> doubleSkewer(const Action& A, std::size_t h, std::size_t k, std::size_t maxLen) {
  const Pocset& P = A.pocset();
  if (!P.leq(h, k)) throw Error(ErrorCode::InvalidInput, "double skewering needs h <= k");
  for (std::size_t len = 1; len <= maxLen; ++len)
    for (const auto& w : A.reducedWords(len)) {
      auto t = A.apply(w, k);
      if (t && P.less(*t, h)) return w;
    }
  return std::nullopt;
}

bool disjointHalfspaces(const Pocset& P, std::size_t h, std::size_t k) { return P.leq(h, P.star(k)); }

bool stronglySeparated(const Pocset& P, std::size_t h, std::size_t k) {
  if (!disjointHalfspaces(P, h, k)) return false;
  for (std::size_t w = 0; w < P.wallCount(); ++w) {
    std::size_t j = P.wall(w).pos;
    if (transverse(P, j, h) && transverse(P, j, k)) return false;
  }
  return true;
}

namespace {

bool compatible(const Pocset& P, const std::vector<std::size_t>& chosen, std::size_t c, bool strong) {
  for (auto d : chosen) {
    if (P.wallOf(d) == P.wallOf(c)) return false;
    if (strong ? !stronglySeparated(P, d, c) : !disjointHalfspaces(P, d, c)) return false;
  }
  return true;
}

bool facingSearch(const Pocset& P, std::size_t n, bool strong, std::size_t from,
                  std::vector<std::size_t>& chosen) {
  if (chosen.size() == n) return true;
  for (std::size_t c = from; c < P.size(); ++c) {
    if (!compatible(P, chosen, c, strong)) continue;
    chosen.push_back(c);
    if (facingSearch(P, n, strong, c + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

bool isFacing(const Pocset& P, const std::vector<std::size_t>& t, bool strong) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::size_t> before(t.begin(), t.begin() + static_cast<long>(i));
    if (!compatible(P, before, t[i], strong)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> facingTuple(const Pocset& P, std::size_t n,
                                                    std::optional<std::size_t> seed, bool strong) {
  std::vector<std::size_t> chosen;
  if (seed) chosen.push_back(*seed);
  if (facingSearch(P, n, strong, 0, chosen)) return chosen;
  return std::nullopt;
}

std::optional<FacingResult> facingTuple(const Action& A, std::size_t n, std::size_t maxLen,
                                        std::optional<std::size_t> seed, bool strong) {
  const Pocset& P = A.pocset();
  auto triple = facingTuple(P, std::min<std::size_t>(n, 3), seed, strong);
  if (!triple) return std::nullopt;
  FacingResult res{*triple, {}};
  while (res.tuple.size() < n) {
    const auto& t = res.tuple;
    bool grown = false;
    for (std::size_t len = 1; len <= maxLen && !grown; ++len)
      for (const auto& w : A.reducedWords(len)) {
        auto img = A.apply(w, P.star(t[0]));
        if (!img || !P.leq(*img, t.back())) continue;
        auto g1 = A.apply(w, t[1]);
        auto g2 = A.apply(w, t[2]);
        if (!g1 || !g2) continue;
        std::vector<std::size_t> next(t.begin(), t.end() - 1);
        next.push_back(*g1);
        next.push_back(*g2);
        if (!isFacing(P, next, strong)) continue;
        res.tuple = next;
        res.upgrades.push_back(w);
        grown = true;
        break;
      }
    if (!grown) return std::nullopt;
  }
  return res;
}

SectorResult sectorHalfspace(const Pocset& P, std::size_t h, std::size_t k) {
  if (!transverse(P, h, k))
    throw Error(ErrorCode::NotTransverse, P.name(h) + " and " + P.name(k) + " are not transverse");
  SectorResult res;
  const std::size_t sides[2][2] = {{h, P.star(h)}, {k, P.star(k)}};
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (P.wallOf(j) == P.wallOf(h) || P.wallOf(j) == P.wallOf(k)) continue;
    for (auto a : sides[0])
      for (auto b : sides[1])
        if (P.leq(j, a) && P.leq(j, b)) {
          res.halfspace = j;
          res.sectorH = a;
          res.sectorK = b;
          return res;
        }
  }
  res.productWitness = true;
  Bits near = P.emptySet();
  for (std::size_t a = 0; a < P.size(); ++a)
    if (!transverse(P, a, h)) near.set(a);
  Bits part = P.emptySet();
  for (std::size_t a = 0; a < P.size(); ++a)
    for (auto b = near.find_first(); b != Bits::npos; b = near.find_next(b))
      if (P.comparable(a, b)) {
        part.set(a);
        break;
      }
  res.part = part;

  bool ok = P.starOf(part) == part && !part.test(k);
  for (auto a = part.find_first(); ok && a != Bits::npos; a = part.find_next(a))
    for (std::size_t b = 0; b < P.size() && ok; ++b)
      if (!part.test(b) && !transverse(P, a, b)) ok = false;
  if (ok) {
    auto D = decompose(P);
    Bits unionOfFactors = P.emptySet();
    for (std::size_t f = 0; f < D.factors.size(); ++f) {
      const auto& ws = D.factorWalls[f];
      bool inside = part.test(P.wall(ws[0]).pos);
      for (auto w : ws)
        if (part.test(P.wall(w).pos) != inside) ok = false;
      if (inside)
        for (auto w : ws) {
          unionOfFactors.set(P.wall(w).pos);
          unionOfFactors.set(P.wall(w).neg);
        }
    }
    ok = ok && unionOfFactors == part;
  }
  res.partMatchesFactors = ok;
  return res;
}

FreeCertificate pingpong(const Action& A, const Word& a, const Word& b, std::size_t h, std::size_t k,
                         std::size_t maxLen) {
  const Pocset& P = A.pocset();
  auto need = [&](const Word& w, std::size_t x) {
    auto t = A.apply(w, x);
    if (!t) throw Error(ErrorCode::OutOfWindow, "word " + A.format(w) + " undefined on " + P.name(x));
    return *t;
  };
  const std::size_t ahs = need(a, P.star(h));
  const std::size_t bks = need(b, P.star(k));
  const std::vector<std::size_t> four{h, ahs, k, bks};
  if (!isFacing(P, four, false))
    throw Error(ErrorCode::NotFacing, "h, a h*, k, b k* are not pairwise disjoint");

  FreeCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.h = h;
  cert.k = k;
  cert.requestedDepth = maxLen;
  cert.facts.push_back("facing: " + P.name(h) + ", " + P.name(ahs) + ", " + P.name(k) + ", " + P.name(bks));

  const Word ai = inverseWord(a), bi = inverseWord(b);
  struct Family {
    const Word* w;
    std::string label;
    std::vector<std::size_t> from;
    std::size_t into;
  };
  const std::vector<Family> families{{&a, "a", {ahs, bks, k}, ahs},
                                     {&ai, "a^-1", {h, bks, k}, h},
                                     {&b, "b", {bks, ahs, h}, bks},
                                     {&bi, "b^-1", {k, ahs, h}, k}};
  for (const auto& f : families) {
    for (auto s : f.from) {
      std::size_t t = need(*f.w, s);
      if (!P.leq(t, f.into))
        throw Error(ErrorCode::InclusionFailed, f.label + " maps " + P.name(s) + " to " + P.name(t) +
                                                    ", not inside " + P.name(f.into));
    }
    cert.facts.push_back(f.label + " maps " + P.name(f.from[0]) + ", " + P.name(f.from[1]) + ", " +
                         P.name(f.from[2]) + " into " + P.name(f.into));
  }

  const std::vector<std::size_t> omega{P.star(h), P.star(ahs), P.star(k), P.star(bks)};
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = i + 1; j < omega.size(); ++j)
      if (disjointHalfspaces(P, omega[i], omega[j]))
        throw Error(ErrorCode::InclusionFailed, "the ping-pong region is empty");
  cert.facts.push_back("region " + P.name(omega[0]) + " & " + P.name(omega[1]) + " & " + P.name(omega[2]) +
                       " & " + P.name(omega[3]) + " is nonempty");

  // Abstract letters 0..3 stand for a, a^-1, b, b^-1.
  const Word* concrete[4] = {&a, &ai, &b, &bi};
  const std::size_t target[4] = {ahs, h, bks, k};
  const std::size_t inverseOf[4] = {1, 0, 3, 2};
  std::vector<std::vector<int>> level{{}};
  cert.depth = 0;
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& u : level)
      for (int l = 0; l < 4; ++l) {
        if (!u.empty() && static_cast<std::size_t>(u.back()) == inverseOf[l]) continue;
        auto v = u;
        v.push_back(l);
        next.push_back(v);
      }
    bool complete = true;
    std::size_t checked = 0;
    for (const auto& u : next) {
      Word word;
      for (int l : u) word.insert(word.end(), concrete[l]->begin(), concrete[l]->end());
      bool inside = false, defined = true;
      for (auto s : omega) {
        auto t = A.apply(word, s);
        if (!t) {
          defined = false;
          break;
        }
        if (P.leq(*t, target[u.front()])) inside = true;
      }
      auto hw = A.apply(word, h);
      if (!defined || !hw) {
        complete = false;
        break;
      }
      if (!inside)
        throw Error(ErrorCode::InclusionFailed,
                    "word " + A.format(word) + " does not map the region into " + P.name(target[u.front()]));
      if (*hw == h || *hw == P.star(h))
        throw Error(ErrorCode::InclusionFailed, "word " + A.format(word) + " stabilises the wall of " + P.name(h));
      ++checked;
    }
    if (!complete) break;
    cert.wordsChecked += checked;
    cert.depth = len;
    level = std::move(next);
  }
  return cert;
}

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::RollerElementary: return "ROLLER_ELEMENTARY";
    case Verdict::RollerMinimalCore: return "ROLLER_MINIMAL_CORE";
    case Verdict::FreeSubgroup: return "FREE_SUBGROUP";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ClassificationReport classify(const Action& A, std::size_t maxLen) {
  const Pocset& P = A.pocset();
  ClassificationReport rep;
  if (A.isTotal()) {
    rep.stage = 1;
    auto best = minOrbit(A);
    rep.orbit = best.orbit;
    rep.verdict = Verdict::RollerElementary;
    rep.witness = best.size == 1 ? "fixed point" : "finite orbit of size " + std::to_string(best.size);
    rep.core = convexHull(P, best.orbit);
    return rep;
  }
  rep.stage = 3;
  std::size_t attempts = 0;
  const std::size_t budget = 64 * enumerationCap();
  auto letters = A.alphabet();
  for (const auto& la : letters)
    for (const auto& lb : letters) {
      if (la.gen >= lb.gen) continue;
      for (std::size_t h = 0; h < P.size(); ++h) {
        auto ahs = A.apply({la}, P.star(h));
        if (!ahs || P.wallOf(*ahs) == P.wallOf(h) || !disjointHalfspaces(P, h, *ahs)) continue;
        for (std::size_t k = 0; k < P.size(); ++k) {
          auto bks = A.apply({lb}, P.star(k));
          if (!bks || !isFacing(P, {h, *ahs, k, *bks}, false)) continue;
          if (++attempts > budget) {
            rep.witness = "search budget exhausted";
            return rep;
          }
          try {
            rep.certificate = pingpong(A, {la}, {lb}, h, k, maxLen);
            rep.verdict = Verdict::FreeSubgroup;
            rep.witness = "ping-pong on " + P.name(h) + ", " + P.name(k);
            return rep;
          } catch (const Error&) {
          }
        }
      }
    }
  rep.witness = "no ping-pong certificate";
  return rep;
}

std::vector<std::pair<Point, Point>> linealPairs(const Pocset& P) {
  auto pts = points(P);
  std::set<Point> all(pts.begin(), pts.end());
  std::vector<std::pair<Point, Point>> out;
  for (const auto& x : pts) {
    Point y = P.starOf(x);
    if (all.count(y) && x < y) out.push_back({x, y});
  }
  return out;
}

}  // namespace mediankit
