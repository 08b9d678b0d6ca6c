#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mediankit/acceptance.hpp"
#include "mediankit/actions.hpp"
#include "mediankit/boundary.hpp"
#include "mediankit/chain_system.hpp"
#include "mediankit/core.hpp"
#include "mediankit/errors.hpp"
#include "mediankit/fixtures.hpp"
#include "mediankit/io.hpp"
#include "mediankit/structure.hpp"
#include "mediankit/subdivision.hpp"
#include "mediankit/window.hpp"

using namespace mediankit;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kNegative = 2, kInconclusive = 3, kUsage = 64, kInvalid = 65 };

struct Options {
  std::string fixture, file, dumpFixture;
  bool verify = false;
  std::string x, y, z, halfspace, pair, word, point;
  std::string a = "a", b = "b", h, k;
  std::string shift, shiftFile, dot;
  std::size_t maxWordLen = 6;
  bool maxWordLenGiven = false;
  std::size_t tupleSize = 3;
  bool strong = false;
  std::size_t depth = 1;
  std::uint64_t seed = kAcceptanceSeed;
};

struct Outcome {
  std::string verdict;
  int exit = kOk;
  Json result = Json::object();
  std::optional<Json> verification;
  std::string summary;
};

struct Input {
  std::string source;
  std::string digest;
};

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exitFor(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::EmptyInput:
    case ErrorCode::NotAnAutomorphism:
      return kInvalid;
    case ErrorCode::WallBudgetExceeded:
    case ErrorCode::HorizonExceeded:
    case ErrorCode::OutOfWindow:
      return kInconclusive;
    default:
      return kNegative;
  }
}

std::pair<std::string, std::string> splitPair(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw Error(ErrorCode::InvalidInput, "--pair expects h,k");
  return {s.substr(0, c), s.substr(c + 1)};
}

Json names(const Pocset& P, const std::vector<std::size_t>& hs) {
  Json out = Json::array();
  for (auto h : hs) out.push_back(P.name(h));
  return out;
}

Json pointList(const Pocset& P, const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& x : pts) out.push_back(pointToJson(P, x));
  return out;
}

// Word application straight from the generator tables, for --verify.
std::optional<std::size_t> rawApply(const Action& A, const Word& w, std::size_t h) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& img = A.generator(it->gen).image;
    if (!it->inverse) {
      if (img[h] == kUndefined) return std::nullopt;
      h = img[h];
    } else {
      std::size_t found = kUndefined;
      for (std::size_t j = 0; j < img.size(); ++j)
        if (img[j] == h) found = j;
      if (found == kUndefined) return std::nullopt;
      h = found;
    }
  }
  return h;
}

bool coreDisjoint(const Pocset& P, std::size_t h, std::size_t k) { return P.leq(h, P.star(k)); }

bool coreTransverse(const Pocset& P, std::size_t h, std::size_t k) {
  if (P.wallOf(h) == P.wallOf(k)) return false;
  for (auto s : {h, P.star(h)})
    for (auto t : {k, P.star(k)})
      if (P.comparable(s, t)) return false;
  return true;
}

struct Checks {
  Json list = Json::array();
  bool ok = true;
  void add(const std::string& what, bool passed) {
    list.push_back({{"check", what}, {"passed", passed}});
    ok = ok && passed;
  }
  Json json() const { return {{"passed", ok}, {"checks", list}}; }
};

class Runner {
 public:
  explicit Runner(const Options& o) : opt(o) {}

  const Options& opt;
  Input input;

  ActionFixture action() {
    if (!opt.file.empty()) {
      std::string text = readText(opt.file);
      input = {opt.file, digest(text)};
      ActionFixture F;
      F.name = opt.file;
      F.action = actionFromJson(parseJson(text));
      return F;
    }
    if (opt.fixture.empty()) throw Error(ErrorCode::InvalidInput, "give --fixture NAME or --file PATH");
    ActionFixture F = actionFixture(opt.fixture);
    input = {"fixture:" + opt.fixture, digest(actionToJson(F.action).dump())};
    return F;
  }

  SystemFixture system() {
    if (!opt.file.empty()) {
      std::string text = readText(opt.file);
      input = {opt.file, digest(text)};
      SystemFixture F;
      F.name = opt.file;
      F.system = systemFromJson(parseJson(text));
      return F;
    }
    if (opt.fixture.empty()) throw Error(ErrorCode::InvalidInput, "give --fixture NAME or --file PATH");
    SystemFixture F = systemFixture(opt.fixture);
    input = {"fixture:" + opt.fixture, digest(systemToJson(F.system).dump())};
    return F;
  }

  ShiftMap shiftOf(const SystemFixture& F) {
    if (!opt.shiftFile.empty()) return shiftFromJson(F.system, readJsonFile(opt.shiftFile));
    if (opt.shift.empty()) throw Error(ErrorCode::InvalidInput, "give --shift NAME or --shift-file PATH");
    auto it = F.shifts.find(opt.shift);
    if (it == F.shifts.end()) throw Error(ErrorCode::InvalidInput, "unknown shift '" + opt.shift + "'");
    return it->second;
  }

  Point pointArg(const ActionFixture& F, const std::string& spec, const char* flag) {
    if (spec.empty()) throw Error(ErrorCode::InvalidInput, std::string("missing ") + flag);
    return fixturePoint(F, spec);
  }

  Outcome validateCmd() {
    Outcome out;
    auto F = action();
    auto rep = validate(F.action.pocset());
    auto arep = validateAction(F.action);
    Json v = Json::array();
    for (const auto& r : {rep, arep})
      for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
    bool ok = rep.ok() && arep.ok();
    out.result = {{"walls", F.action.pocset().wallCount()},
                  {"generators", F.action.generatorCount()},
                  {"violations", v}};
    out.verdict = ok ? "VALID" : "INVALID";
    out.exit = ok ? kOk : kNegative;
    out.summary = out.verdict + " (" + std::to_string(v.size()) + " violations)";
    return out;
  }

  Outcome pointsCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    auto pts = points(P);
    Outcome out;
    out.verdict = "OK";
    out.result = {{"count", pts.size()}, {"points", pointList(P, pts)}};
    out.summary = std::to_string(pts.size()) + " points";
    return out;
  }

  Outcome medianCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    Point x = pointArg(F, opt.x, "--x"), y = pointArg(F, opt.y, "--y"), z = pointArg(F, opt.z, "--z");
    Point m = median(x, y, z);
    Outcome out;
    out.verdict = "OK";
    out.result = {{"median", pointToJson(P, m)}};
    out.summary = "median " + out.result["median"].dump();
    if (opt.verify) {
      Checks c;
      bool maj = true;
      for (std::size_t h = 0; h < P.size(); ++h) {
        int n = x[h] + y[h] + z[h];
        if ((n >= 2) != static_cast<bool>(m[h])) maj = false;
      }
      c.add("every halfspace holds in the median iff it holds in two of the three points", maj);
      c.add("median is an ultrafilter", isUltrafilter(P, m));
      out.verification = c.json();
    }
    return out;
  }

  Outcome distanceCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    Point x = pointArg(F, opt.x, "--x"), y = pointArg(F, opt.y, "--y");
    Bits sep = separating(P, x, y);
    Outcome out;
    out.verdict = "OK";
    out.result = {{"distance", toString(distance(P, x, y))}, {"separating", setToJson(P, sep)}};
    out.summary = "distance " + toString(distance(P, x, y));
    return out;
  }

  Outcome rankCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    auto r = rankWithClique(P);
    Json walls = Json::array();
    for (auto w : r.walls) walls.push_back(P.wall(w).id);
    Outcome out;
    out.verdict = "OK";
    out.result = {{"rank", r.rank}, {"clique", walls}};
    out.summary = "rank=" + std::to_string(r.rank);
    if (opt.verify) {
      Checks c;
      bool pairwise = true;
      for (std::size_t i = 0; i < r.walls.size(); ++i)
        for (std::size_t j = i + 1; j < r.walls.size(); ++j)
          if (!coreTransverse(P, P.wall(r.walls[i]).pos, P.wall(r.walls[j]).pos)) pairwise = false;
      c.add("clique walls pairwise transverse", pairwise);
      out.verification = c.json();
    }
    return out;
  }

  Outcome decomposeCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    auto D = decompose(P);
    Json factors = Json::array();
    for (std::size_t i = 0; i < D.factors.size(); ++i) {
      Json walls = Json::array();
      for (auto w : D.factorWalls[i]) walls.push_back(P.wall(w).id);
      std::size_t pts = points(D.factors[i]).size();
      factors.push_back({{"walls", walls}, {"points", pts}, {"rank", rank(D.factors[i])}});
    }
    Outcome out;
    out.verdict = D.factors.size() > 1 ? "REDUCIBLE" : "IRREDUCIBLE";
    out.result = {{"factorCount", D.factors.size()}, {"factors", factors}};
    out.summary = std::to_string(D.factors.size()) + " factor(s)";
    return out;
  }

  Outcome subdivideCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    if (opt.depth == 0) throw Error(ErrorCode::InvalidInput, "-n must be at least 1");
    auto T = tower(P, opt.depth);
    const Subdivision& last = T.back();
    // compose projections down to the base
    std::vector<std::size_t> proj(last.child.size());
    for (std::size_t h = 0; h < proj.size(); ++h) {
      std::size_t x = h;
      for (std::size_t s = T.size() - 1; s >= 1; --s) x = T[s].projection[x];
      proj[h] = x;
    }
    Json pm = Json::object();
    for (std::size_t h = 0; h < proj.size(); ++h) pm[last.child.name(h)] = P.name(proj[h]);
    Outcome out;
    out.verdict = "OK";
    out.result = {{"stages", opt.depth},
                  {"walls", last.child.wallCount()},
                  {"maxAtom", toString(maxAtom(last.child))},
                  {"pocset", pocsetToJson(last.child)},
                  {"projection", pm}};
    out.summary = "stage " + std::to_string(opt.depth) + ": " + std::to_string(last.child.wallCount()) + " walls";
    return out;
  }

  Outcome orbitsCmd() {
    auto F = action();
    const Action& A = F.action;
    if (!A.isTotal()) throw Error(ErrorCode::InvalidInput, "orbits needs a total action");
    const Pocset& P = A.pocset();
    auto m = minOrbit(A);
    Json inv = Json::object();
    for (std::size_t g = 0; g < A.generatorCount(); ++g) {
      Json ws = Json::array();
      for (auto w : wallInversions(A, Word{Letter{g, false}})) ws.push_back(P.wall(w).id);
      inv[A.generator(g).name] = ws;
    }
    std::vector<std::size_t> sizes;
    std::set<Point> seen;
    for (const auto& x : points(P)) {
      if (seen.count(x)) continue;
      auto o = orbit(A, x);
      seen.insert(o.begin(), o.end());
      sizes.push_back(o.size());
    }
    Outcome out;
    out.verdict = m.size <= m.bound ? "WITHIN_BOUND" : "BOUND_VIOLATED";
    out.exit = m.size <= m.bound ? kOk : kNegative;
    out.result = {{"minOrbitSize", m.size},
                  {"bound", m.bound},
                  {"minOrbit", pointList(P, m.orbit)},
                  {"orbitSizes", sizes},
                  {"wallInversions", inv}};
    out.summary = "smallest orbit " + std::to_string(m.size) + " <= " + std::to_string(m.bound);
    return out;
  }

  std::size_t halfspaceArg(const Pocset& P, const std::string& name, const char* flag) {
    if (name.empty()) throw Error(ErrorCode::InvalidInput, std::string("missing ") + flag);
    return P.at(name);
  }

  Outcome flipCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    std::size_t h = halfspaceArg(P, opt.halfspace, "--halfspace");
    auto r = findFlip(A, h, opt.maxWordLen);
    Outcome out;
    out.result = {{"halfspace", P.name(h)}, {"maxWordLen", opt.maxWordLen}, {"skippedWords", r.skippedWords}};
    switch (r.kind) {
      case FlipKind::Flipped: {
        out.verdict = "FLIPPED";
        out.result["word"] = A.format(r.word);
        out.result["image"] = P.name(*A.apply(r.word, P.star(h)));
        out.summary = A.format(r.word) + " maps " + P.name(P.star(h)) + " strictly inside " + P.name(h);
        if (opt.verify) {
          Checks c;
          auto t = rawApply(A, r.word, P.star(h));
          c.add("word image of h* is defined", t.has_value());
          c.add("g h* is strictly inside h", t && P.less(*t, h));
          out.verification = c.json();
        }
        break;
      }
      case FlipKind::InvariantSet:
        out.verdict = "INVARIANT_SET";
        out.exit = kNegative;
        out.result["invariantSigma"] = setToJson(P, r.invariantSigma);
        out.result["invariantPoints"] = pointList(P, r.invariantPoints);
        out.summary = "invariant convex set with " + std::to_string(r.invariantPoints.size()) + " points";
        if (opt.verify && A.isTotal()) {
          Checks c;
          std::set<Point> S(r.invariantPoints.begin(), r.invariantPoints.end());
          bool closed = true;
          for (std::size_t g = 0; g < A.generatorCount(); ++g)
            for (const auto& x : r.invariantPoints) {
              Automorphism aut{A.generator(g).name, A.generator(g).image};
              if (!S.count(applyToPoint(aut, x))) closed = false;
            }
          c.add("every generator maps the set into itself", closed);
          bool inside = true;
          for (const auto& x : r.invariantPoints)
            if (!x[h]) inside = false;
          c.add("every point of the set lies in h", inside);
          out.verification = c.json();
        }
        break;
      case FlipKind::Inconclusive:
        out.verdict = "INCONCLUSIVE";
        out.exit = kInconclusive;
        out.summary = "no flip up to length " + std::to_string(r.maxLength);
        break;
    }
    return out;
  }

  Outcome skewerCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    std::size_t h, k;
    if (!opt.pair.empty()) {
      auto [hs, ks] = splitPair(opt.pair);
      h = P.at(hs);
      k = P.at(ks);
    } else {
      h = k = halfspaceArg(P, opt.halfspace, "--pair or --halfspace");
    }
    auto w = doubleSkewer(A, h, k, opt.maxWordLen);
    Outcome out;
    out.result = {{"h", P.name(h)}, {"k", P.name(k)}, {"maxWordLen", opt.maxWordLen}};
    if (!w) {
      out.verdict = "INCONCLUSIVE";
      out.exit = kInconclusive;
      out.summary = "no skewering word up to length " + std::to_string(opt.maxWordLen);
      return out;
    }
    std::size_t img = *A.apply(*w, k);
    out.verdict = "SKEWERED";
    out.result["word"] = A.format(*w);
    out.result["image"] = P.name(img);
    out.summary = A.format(*w) + " maps " + P.name(k) + " strictly inside " + P.name(h);
    if (opt.verify) {
      Checks c;
      auto t = rawApply(A, *w, k);
      c.add("h is contained in k", P.leq(h, k));
      c.add("g k is strictly inside h", t && P.less(*t, h));
      out.verification = c.json();
    }
    return out;
  }

  Outcome facingCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    std::optional<std::size_t> seed;
    if (!opt.halfspace.empty()) seed = P.at(opt.halfspace);
    if (opt.tupleSize < 1) throw Error(ErrorCode::InvalidInput, "--tuple-size must be positive");
    std::vector<std::size_t> tuple;
    Json upgrades = Json::array();
    bool found = false;
    if (opt.maxWordLenGiven && A.generatorCount() > 0) {
      auto r = facingTuple(A, opt.tupleSize, opt.maxWordLen, seed, opt.strong);
      if (r) {
        found = true;
        tuple = r->tuple;
        for (const auto& w : r->upgrades) upgrades.push_back(A.format(w));
      }
    } else {
      auto r = facingTuple(P, opt.tupleSize, seed, opt.strong);
      if (r) {
        found = true;
        tuple = *r;
      }
    }
    Outcome out;
    out.result = {{"tupleSize", opt.tupleSize}, {"strong", opt.strong}};
    if (!found) {
      out.verdict = "NONE";
      out.exit = opt.maxWordLenGiven ? kInconclusive : kNegative;
      out.summary = "no facing " + std::to_string(opt.tupleSize) + "-tuple";
      return out;
    }
    out.verdict = "FOUND";
    out.result["tuple"] = names(P, tuple);
    out.result["upgrades"] = upgrades;
    out.summary = "facing tuple " + out.result["tuple"].dump();
    if (opt.verify) {
      Checks c;
      bool disjoint = true, walls = true, strong = true;
      for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
          if (!coreDisjoint(P, tuple[i], tuple[j])) disjoint = false;
          if (P.wallOf(tuple[i]) == P.wallOf(tuple[j])) walls = false;
          if (opt.strong)
            for (std::size_t x = 0; x < P.size(); ++x)
              if (coreTransverse(P, x, tuple[i]) && coreTransverse(P, x, tuple[j])) strong = false;
        }
      c.add("pairwise disjoint", disjoint);
      c.add("distinct walls", walls);
      if (opt.strong) c.add("no wall transverse to two members", strong);
      out.verification = c.json();
    }
    return out;
  }

  Outcome sectorsCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    if (opt.pair.empty()) throw Error(ErrorCode::InvalidInput, "missing --pair");
    auto [hs, ks] = splitPair(opt.pair);
    std::size_t h = P.at(hs), k = P.at(ks);
    auto r = sectorHalfspace(P, h, k);
    Outcome out;
    out.result = {{"h", P.name(h)}, {"k", P.name(k)}};
    if (r.productWitness) {
      out.verdict = "PRODUCT";
      out.result["part"] = setToJson(P, r.part);
      out.result["partMatchesFactors"] = r.partMatchesFactors;
      out.summary = "no halfspace inside a sector; product splitting";
    } else {
      out.verdict = "SECTOR_HALFSPACE";
      out.result["halfspace"] = P.name(r.halfspace);
      out.result["sector"] = {P.name(r.sectorH), P.name(r.sectorK)};
      out.summary = P.name(r.halfspace) + " lies in " + P.name(r.sectorH) + " & " + P.name(r.sectorK);
      if (opt.verify) {
        Checks c;
        c.add("h and k transverse", coreTransverse(P, h, k));
        c.add("halfspace inside both sector sides", P.leq(r.halfspace, r.sectorH) && P.leq(r.halfspace, r.sectorK));
        out.verification = c.json();
      }
    }
    return out;
  }

  Outcome freeCertCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    Word a = A.parse(opt.a), b = A.parse(opt.b);
    std::size_t h = halfspaceArg(P, opt.h, "--h"), k = halfspaceArg(P, opt.k, "--k");
    std::size_t len = opt.maxWordLenGiven ? opt.maxWordLen : 4;
    auto cert = pingpong(A, a, b, h, k, len);
    Outcome out;
    bool full = cert.depth >= cert.requestedDepth;
    out.verdict = full ? "VERIFIED" : "PARTIAL";
    out.exit = full ? kOk : kInconclusive;
    out.result = {{"a", A.format(cert.a)},
                  {"b", A.format(cert.b)},
                  {"h", P.name(cert.h)},
                  {"k", P.name(cert.k)},
                  {"facts", cert.facts},
                  {"requestedDepth", cert.requestedDepth},
                  {"depth", cert.depth},
                  {"wordsChecked", cert.wordsChecked}};
    out.summary = out.verdict + ": " + std::to_string(cert.wordsChecked) + " words to depth " +
                  std::to_string(cert.depth);
    if (opt.verify) {
      Checks c;
      auto ahs = rawApply(A, a, P.star(h));
      auto bks = rawApply(A, b, P.star(k));
      c.add("a h* and b k* defined", ahs && bks);
      if (ahs && bks) {
        std::vector<std::size_t> four{h, *ahs, k, *bks};
        bool facing = true;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = i + 1; j < 4; ++j)
            if (!coreDisjoint(P, four[i], four[j])) facing = false;
        c.add("h, a h*, k, b k* pairwise disjoint", facing);
        Word ai = inverseWord(a), bi = inverseWord(b);
        struct Fam {
          const Word* w;
          std::vector<std::size_t> from;
          std::size_t into;
          const char* label;
        };
        for (const auto& f : std::vector<Fam>{{&a, {*ahs, *bks, k}, *ahs, "a"},
                                              {&ai, {h, *bks, k}, h, "a^-1"},
                                              {&b, {*bks, *ahs, h}, *bks, "b"},
                                              {&bi, {k, *ahs, h}, k, "b^-1"}}) {
          bool ok = true;
          for (auto s : f.from) {
            auto t = rawApply(A, *f.w, s);
            if (!t || !P.leq(*t, f.into)) ok = false;
          }
          c.add(std::string(f.label) + " inclusions", ok);
        }
      }
      out.verification = c.json();
    }
    return out;
  }

  Outcome linealCmd() {
    auto F = action();
    const Pocset& P = F.action.pocset();
    auto pairs = linealPairs(P);
    Json js = Json::array();
    for (const auto& [x, y] : pairs) js.push_back({pointToJson(P, x), pointToJson(P, y)});
    Outcome out;
    out.verdict = pairs.empty() ? "NONE" : "LINEAL";
    out.result = {{"count", pairs.size()}, {"pairs", js}};
    out.summary = std::to_string(pairs.size()) + " pair(s) separated by every wall";
    if (opt.verify) {
      Checks c;
      bool ok = true;
      for (const auto& [x, y] : pairs)
        if (separating(P, x, y).count() != P.wallCount()) ok = false;
      c.add("each pair separated by every wall", ok);
      out.verification = c.json();
    }
    return out;
  }

  Outcome nestedCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    if (opt.word.empty()) throw Error(ErrorCode::InvalidInput, "missing --word");
    Point x = pointArg(F, opt.point, "--point");
    auto r = findNested(A, x, A.parse(opt.word));
    Outcome out;
    out.verdict = "NESTED";
    out.result = {{"word", A.format(r.word)},
                  {"halfspace", P.name(r.halfspace)},
                  {"displacement", toString(r.displacement)},
                  {"threshold", toString(r.threshold)}};
    out.summary = A.format(r.word) + " nests " + P.name(r.halfspace);
    if (opt.verify) {
      Checks c;
      auto t = rawApply(A, r.word, r.halfspace);
      c.add("g h strictly inside h", t && P.less(*t, r.halfspace));
      out.verification = c.json();
    }
    return out;
  }

  Outcome classifyCmd() {
    auto F = action();
    const Action& A = F.action;
    const Pocset& P = A.pocset();
    auto rep = classify(A, opt.maxWordLen);
    Outcome out;
    out.verdict = verdictName(rep.verdict);
    out.exit = rep.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
    out.result = {{"stage", rep.stage}, {"witness", rep.witness}};
    if (!rep.orbit.empty()) out.result["orbit"] = pointList(P, rep.orbit);
    if (!rep.core.points.empty()) out.result["core"] = pointList(P, rep.core.points);
    if (rep.certificate) {
      const auto& c = *rep.certificate;
      out.result["certificate"] = {{"a", A.format(c.a)}, {"b", A.format(c.b)}, {"h", P.name(c.h)},
                                   {"k", P.name(c.k)},   {"facts", c.facts},   {"depth", c.depth}};
    }
    out.summary = out.verdict + " (" + rep.witness + ")";
    return out;
  }

  Json graphJson(const ChainSystem& S, const UbsGraph& G) {
    Json vs = Json::array();
    for (std::size_t v = 0; v < G.classes.size(); ++v) {
      Json chains = Json::array();
      for (auto c : G.classes[v]) chains.push_back(S.chains[c].id);
      vs.push_back({{"chains", chains}, {"representative", describe(S, G.representatives[v])}});
    }
    Json es = Json::array();
    for (auto [u, v] : G.edges) es.push_back({u, v});
    return {{"vertices", vs},
            {"edges", es},
            {"rankProxy", G.rankProxy},
            {"acyclic", G.acyclic},
            {"reachabilityGivesEdge", G.reachabilityGivesEdge}};
  }

  Outcome ubsValidateCmd() {
    auto F = system();
    const ChainSystem& S = F.system;
    auto rep = validateSystem(S);
    Json v = Json::array();
    for (const auto& x : rep.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
    Json shifts = Json::object();
    bool ok = rep.ok();
    if (ok) {
      std::map<std::string, ShiftMap> check;
      if (!opt.shift.empty() || !opt.shiftFile.empty())
        check[opt.shift.empty() ? opt.shiftFile : opt.shift] = shiftOf(F);
      else
        check = F.shifts;
      for (const auto& [name, g] : check) {
        auto sr = validateShift(S, S, g);
        Json sv = Json::array();
        for (const auto& x : sr.violations) sv.push_back({{"kind", x.kind}, {"detail", x.detail}});
        shifts[name] = sv;
        ok = ok && sr.ok();
      }
    }
    Outcome out;
    out.verdict = ok ? "VALID" : "INVALID";
    out.exit = ok ? kOk : kNegative;
    out.result = {{"chains", S.chainCount()},
                  {"stableIndex", S.stableIndex()},
                  {"offsetReach", S.offsetReach()},
                  {"weightPeriod", S.weightPeriod()},
                  {"searchHorizon", S.searchHorizon()},
                  {"violations", v},
                  {"shifts", shifts}};
    out.summary = out.verdict;
    return out;
  }

  Outcome ubsGraphCmd() {
    auto F = system();
    const ChainSystem& S = F.system;
    auto G = ubsGraph(S);
    Outcome out;
    out.verdict = "OK";
    out.result = graphJson(S, G);
    Json tails = Json::object();
    for (std::size_t c = 0; c < S.chainCount(); ++c) {
      auto t = minimalTail(S, c);
      tails[S.chains[c].id] = {{"index", t.index}, {"ubs", describe(S, t.ubs)}};
    }
    out.result["minimalTails"] = tails;
    if (!opt.dot.empty()) {
      std::ofstream f(opt.dot);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + opt.dot);
      f << ubsGraphDot(S, G);
      out.result["dot"] = opt.dot;
    }
    out.summary = std::to_string(G.classes.size()) + " vertices, " + std::to_string(G.edges.size()) + " edges";
    return out;
  }

  Outcome ubsChiCmd() {
    auto F = system();
    const ChainSystem& S = F.system;
    ShiftMap g = shiftOf(F);
    auto G = ubsGraph(S);
    auto chi = chiVector(S, g);
    Json cj = Json::array();
    for (std::size_t v = 0; v < chi.size(); ++v)
      cj.push_back({{"class", describe(S, G.representatives[v])}, {"chi", toString(chi[v])}});
    bool kernel = inKernel(S, g);
    Outcome out;
    out.verdict = kernel ? "IN_KERNEL" : "NOT_IN_KERNEL";
    out.result = {{"chi", cj}, {"inKernel", kernel}};
    std::string s;
    for (const auto& x : chi) s += (s.empty() ? "" : ", ") + toString(x);
    out.summary = "chi = (" + s + ")";
    return out;
  }

  Outcome acceptanceCmd() {
    input = {"builtin", digest("acceptance:" + std::to_string(opt.seed))};
    auto results = runAcceptance(opt.seed);
    Json rs = Json::array();
    bool all = true;
    std::string lines;
    for (const auto& r : results) {
      rs.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
      lines += std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.title + ": " +
               r.detail + "\n";
    }
    Outcome out;
    out.verdict = all ? "PASS" : "FAIL";
    out.exit = all ? kOk : kNegative;
    out.result = {{"seed", opt.seed}, {"criteria", rs}};
    out.summary = lines + (all ? "all criteria passed" : "some criteria failed");
    return out;
  }
};

Json dumpFixture(const std::string& name) {
  Json out = Json::object();
  auto an = actionFixtureNames();
  auto sn = systemFixtureNames();
  bool found = false;
  if (std::find(an.begin(), an.end(), name) != an.end()) {
    auto F = actionFixture(name);
    Json j = actionToJson(F.action);
    Json pts = Json::object();
    for (const auto& [n, x] : F.namedPoints) pts[n] = pointToJson(F.action.pocset(), x);
    j["namedPoints"] = pts;
    out["action"] = j;
    found = true;
  }
  if (std::find(sn.begin(), sn.end(), name) != sn.end()) {
    auto F = systemFixture(name);
    Json j = systemToJson(F.system);
    Json sh = Json::object();
    for (const auto& [n, g] : F.shifts) sh[n] = shiftToJson(F.system, g);
    j["shifts"] = sh;
    out["system"] = j;
    found = true;
  }
  if (!found) throw Error(ErrorCode::InvalidInput, "unknown fixture '" + name + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Finite median spaces, group actions on them, and boundary chain systems."};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--fixture", opt.fixture, "built-in fixture name");
  app.add_option("--file", opt.file, "pocset, window action or chain system JSON file");
  app.add_option("--dump-fixture", opt.dumpFixture, "print a built-in fixture as JSON and exit");
  app.add_flag("--verify", opt.verify, "re-check emitted certificates against the pocset order");

  std::map<std::string, std::function<Outcome(Runner&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, auto method) {
    handlers[name] = [method](Runner& r) { return (r.*method)(); };
    return app.add_subcommand(name, help);
  };
  auto addLen = [&](CLI::App* s) {
    s->add_option("--max-word-len", opt.maxWordLen, "longest word searched")
        ->each([&](const std::string&) { opt.maxWordLenGiven = true; });
  };

  sub("validate", "check pocset axioms and generator maps", &Runner::validateCmd);
  sub("points", "enumerate ultrafilters", &Runner::pointsCmd);
  auto* med = sub("median", "median of three points", &Runner::medianCmd);
  med->add_option("--x", opt.x)->required();
  med->add_option("--y", opt.y)->required();
  med->add_option("--z", opt.z)->required();
  auto* dist = sub("distance", "weighted distance of two points", &Runner::distanceCmd);
  dist->add_option("--x", opt.x)->required();
  dist->add_option("--y", opt.y)->required();
  sub("rank", "largest family of pairwise transverse walls", &Runner::rankCmd);
  sub("decompose", "irreducible product factors", &Runner::decomposeCmd);
  auto* subd = sub("subdivide", "barycentric subdivision tower", &Runner::subdivideCmd);
  subd->add_option("-n", opt.depth, "number of subdivisions")->check(CLI::PositiveNumber);
  sub("orbits", "orbits of a total action and the smallest one", &Runner::orbitsCmd);
  auto* flip = sub("flip", "search for a word flipping a halfspace", &Runner::flipCmd);
  flip->add_option("--halfspace", opt.halfspace)->required();
  addLen(flip);
  auto* skew = sub("skewer", "search for a word g with g k inside h", &Runner::skewerCmd);
  skew->add_option("--pair", opt.pair, "h,k with h inside k");
  skew->add_option("--halfspace", opt.halfspace, "skewer h against itself");
  addLen(skew);
  auto* fac = sub("facing", "pairwise disjoint halfspaces", &Runner::facingCmd);
  fac->add_option("--tuple-size", opt.tupleSize);
  fac->add_option("--halfspace", opt.halfspace, "seed halfspace");
  fac->add_flag("--strong", opt.strong, "require pairwise strong separation");
  addLen(fac);
  auto* sec = sub("sectors", "halfspace inside a sector of two transverse halfspaces", &Runner::sectorsCmd);
  sec->add_option("--pair", opt.pair)->required();
  auto* fc = sub("free-cert", "ping-pong certificate for a free subgroup", &Runner::freeCertCmd);
  fc->set_help_flag("--help", "print this help and exit");
  fc->add_option("--a", opt.a);
  fc->add_option("--b", opt.b);
  fc->add_option("--h", opt.h)->required();
  fc->add_option("--k", opt.k)->required();
  addLen(fc);
  sub("lineal", "pairs of points separated by every wall", &Runner::linealCmd);
  auto* nest = sub("nested", "halfspace nested by a power of a word", &Runner::nestedCmd);
  nest->add_option("--word", opt.word)->required();
  nest->add_option("--point", opt.point)->required();
  auto* cls = sub("classify", "elementary, minimal core or free subgroup", &Runner::classifyCmd);
  addLen(cls);
  auto* uv = sub("ubs-validate", "check a chain system and its shifts", &Runner::ubsValidateCmd);
  uv->add_option("--shift", opt.shift);
  uv->add_option("--shift-file", opt.shiftFile);
  auto* ug = sub("ubs-graph", "graph of minimal classes", &Runner::ubsGraphCmd);
  ug->add_option("--dot", opt.dot, "write the graph in DOT format");
  auto* uc = sub("ubs-chi", "transfer characters of a shift", &Runner::ubsChiCmd);
  uc->add_option("--shift", opt.shift);
  uc->add_option("--shift-file", opt.shiftFile);
  auto* acc = sub("acceptance", "run the acceptance suite", &Runner::acceptanceCmd);
  acc->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "mediankit: " << e.what() << "\n";
    return kUsage;
  }

  if (!opt.dumpFixture.empty()) {
    try {
      std::cout << dumpFixture(opt.dumpFixture).dump(2) << "\n";
      return kOk;
    } catch (const Error& e) {
      std::cerr << "mediankit: " << e.what() << "\n";
      return kInvalid;
    }
  }

  auto subs = app.get_subcommands();
  if (subs.empty()) {
    std::cerr << app.help();
    return kUsage;
  }
  const std::string cmd = subs.front()->get_name();
  if (!opt.fixture.empty() && !opt.file.empty()) {
    std::cerr << "mediankit: --fixture and --file are exclusive\n";
    return kUsage;
  }

  Json report;
  report["tool"] = "mediankit";
  report["version"] = kVersion;
  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  report["command"] = echo;

  Runner runner(opt);
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string summary;
  try {
    Outcome o = handlers.at(cmd)(runner);
    report["input"] = {{"source", runner.input.source}, {"digest", runner.input.digest}};
    report["verdict"] = o.verdict;
    report["result"] = o.result;
    if (o.verification) {
      report["verification"] = *o.verification;
      if (!(*o.verification)["passed"].get<bool>()) o.exit = kNegative;
    }
    code = o.exit;
    summary = cmd + ": " + o.summary;
  } catch (const Error& e) {
    report["input"] = {{"source", runner.input.source}, {"digest", runner.input.digest}};
    report["verdict"] = "ERROR";
    report["error"] = {{"code", codeName(e.code())}, {"message", e.what()}};
    code = exitFor(e.code());
    summary = cmd + ": " + e.what();
  } catch (const std::exception& e) {
    report["verdict"] = "ERROR";
    report["error"] = {{"code", "INVALID_INPUT"}, {"message", e.what()}};
    code = kInvalid;
    summary = cmd + ": " + e.what();
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timingMs"] = ms;
  std::cout << report.dump(2) << "\n";
  std::cerr << summary << "\n";
  return code;
}
