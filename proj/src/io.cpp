#include "mediankit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mediankit/errors.hpp"

namespace mediankit {

namespace {

[[noreturn]] void fieldError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "field '" + path + "': " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fieldError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fieldError(path + "." + key, "missing");
  return *it;
}

std::string needString(const Json& j, const std::string& path) {
  if (!j.is_string()) fieldError(path, "expected a string");
  return j.get<std::string>();
}

long needInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fieldError(path, "expected an integer");
  return j.get<long>();
}

Rational needRational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fieldError(path, "expected a rational string");
  try {
    return parseRational(j.get<std::string>());
  } catch (const Error& e) {
    fieldError(path, e.what());
  }
}

std::size_t halfspaceAt(const Pocset& P, const Json& j, const std::string& path) {
  auto name = needString(j, path);
  auto h = P.find(name);
  if (!h) fieldError(path, "unknown halfspace '" + name + "'");
  return *h;
}

Range rangeFromJson(const Json& j, const std::string& path) {
  if (j.is_null()) return {};
  if (!j.is_array() || j.size() != 2) fieldError(path, "expected [lo, hi]");
  Range r;
  if (!j[0].is_null()) r.lo = needInt(j[0], path + "[0]");
  if (!j[1].is_null()) r.hi = needInt(j[1], path + "[1]");
  return r;
}

Json rangeToJson(const Range& r) {
  Json j = Json::array();
  j.push_back(r.lo ? Json(*r.lo) : Json(nullptr));
  j.push_back(r.hi ? Json(*r.hi) : Json(nullptr));
  return j;
}

bool unbounded(const Range& r) { return !r.lo && !r.hi; }

}  // namespace

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::InvalidInput,
                "JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseJson(ss.str());
}

Pocset pocsetFromJson(const Json& j) {
  PocsetBuilder b;
  const Json& walls = need(j, "walls", "$");
  if (!walls.is_array()) fieldError("walls", "expected an array");
  for (std::size_t i = 0; i < walls.size(); ++i) {
    std::string p = "walls[" + std::to_string(i) + "]";
    const Json& w = walls[i];
    Rational weight(1);
    if (w.is_object() && w.contains("weight")) weight = needRational(w["weight"], p + ".weight");
    try {
      b.addWall(needString(need(w, "id", p), p + ".id"), needString(need(w, "pos", p), p + ".pos"),
                needString(need(w, "neg", p), p + ".neg"), weight);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidInput) throw;
      fieldError(p, e.what());
    }
  }
  if (j.contains("order")) {
    const Json& order = j["order"];
    if (!order.is_array()) fieldError("order", "expected an array");
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::string p = "order[" + std::to_string(i) + "]";
      if (!order[i].is_array() || order[i].size() != 2) fieldError(p, "expected a pair");
      try {
        b.addOrder(needString(order[i][0], p + "[0]"), needString(order[i][1], p + "[1]"));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidInput) throw;
        fieldError(p, e.what());
      }
    }
  }
  return b.build();
}

Json pocsetToJson(const Pocset& P) {
  Json j;
  j["walls"] = Json::array();
  for (const auto& w : P.walls())
    j["walls"].push_back({{"id", w.id}, {"pos", P.name(w.pos)}, {"neg", P.name(w.neg)}, {"weight", toString(w.weight)}});
  // covering pairs only; the dual of each pair is implied
  j["order"] = Json::array();
  for (std::size_t h = 0; h < P.size(); ++h) {
    Bits above = P.up(h);
    above.reset(h);
    Bits covers = above;
    for (auto k = above.find_first(); k != Bits::npos; k = above.find_next(k)) {
      Bits strict = P.up(k);
      strict.reset(k);
      covers -= strict;
    }
    for (auto k = covers.find_first(); k != Bits::npos; k = covers.find_next(k)) {
      // keep one of each dual pair
      std::size_t dh = P.star(k), dk = P.star(h);
      if (std::make_pair(dh, dk) < std::make_pair(h, k)) continue;
      j["order"].push_back({P.name(h), P.name(k)});
    }
  }
  return j;
}

Automorphism automorphismFromJson(const Pocset& P, const Json& j) {
  Automorphism g;
  g.name = j.contains("name") ? needString(j["name"], "name") : "g";
  g.map.assign(P.size(), kUndefined);
  const Json& m = need(j, "map", "$");
  if (!m.is_object()) fieldError("map", "expected an object");
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto h = P.find(it.key());
    if (!h) fieldError("map." + it.key(), "unknown halfspace");
    std::size_t t = halfspaceAt(P, it.value(), "map." + it.key());
    g.map[*h] = t;
    if (!m.contains(P.name(P.star(*h)))) g.map[P.star(*h)] = P.star(t);
  }
  for (std::size_t h = 0; h < P.size(); ++h)
    if (g.map[h] == kUndefined) g.map[h] = h;
  if (!isAutomorphism(P, g.map))
    throw Error(ErrorCode::NotAnAutomorphism, "map '" + g.name + "' is not an automorphism");
  return g;
}

Json automorphismToJson(const Pocset& P, const Automorphism& g) {
  Json m = Json::object();
  for (std::size_t h = 0; h < P.size(); ++h) m[P.name(h)] = P.name(g.map[h]);
  return {{"name", g.name}, {"map", m}};
}

Action actionFromJson(const Json& j) {
  Pocset P = pocsetFromJson(j.contains("pocset") ? j["pocset"] : j);
  std::vector<PartialMap> gens;
  const char* key = j.contains("maps") ? "maps" : "generators";
  if (j.contains(key)) {
    const Json& maps = j[key];
    if (!maps.is_array()) fieldError(key, "expected an array");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      std::string p = std::string(key) + "[" + std::to_string(i) + "]";
      const Json& mj = maps[i];
      PartialMap m{needString(need(mj, "name", p), p + ".name"), std::vector<std::size_t>(P.size(), kUndefined)};
      const Json& table = need(mj, "map", p);
      if (!table.is_object()) fieldError(p + ".map", "expected an object");
      for (auto it = table.begin(); it != table.end(); ++it) {
        auto h = P.find(it.key());
        if (!h) fieldError(p + ".map." + it.key(), "unknown halfspace");
        std::size_t t = halfspaceAt(P, it.value(), p + ".map." + it.key());
        m.image[*h] = t;
        if (!table.contains(P.name(P.star(*h)))) m.image[P.star(*h)] = P.star(t);
      }
      if (mj.contains("domain")) {
        const Json& dom = mj["domain"];
        if (!dom.is_array()) fieldError(p + ".domain", "expected an array");
        Bits inDomain = P.emptySet();
        for (std::size_t d = 0; d < dom.size(); ++d) {
          std::size_t h = halfspaceAt(P, dom[d], p + ".domain[" + std::to_string(d) + "]");
          inDomain.set(h);
          inDomain.set(P.star(h));
        }
        for (std::size_t h = 0; h < P.size(); ++h) {
          if (inDomain.test(h) && m.image[h] == kUndefined) fieldError(p + ".domain", "no image for " + P.name(h));
          if (!inDomain.test(h)) m.image[h] = kUndefined;
        }
      }
      gens.push_back(std::move(m));
    }
  }
  return Action(std::move(P), std::move(gens));
}

Json actionToJson(const Action& A) {
  const Pocset& P = A.pocset();
  Json j;
  j["pocset"] = pocsetToJson(P);
  j["maps"] = Json::array();
  for (std::size_t g = 0; g < A.generatorCount(); ++g) {
    const auto& m = A.generator(g);
    Json table = Json::object();
    Json domain = Json::array();
    for (std::size_t h = 0; h < P.size(); ++h) {
      if (m.image[h] == kUndefined) continue;
      table[P.name(h)] = P.name(m.image[h]);
      domain.push_back(P.name(h));
    }
    j["maps"].push_back({{"name", m.name}, {"map", table}, {"domain", domain}});
  }
  return j;
}

ChainSystem systemFromJson(const Json& j) {
  ChainSystem S;
  const Json& chains = need(j, "chains", "$");
  if (!chains.is_array()) fieldError("chains", "expected an array");
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::string p = "chains[" + std::to_string(i) + "]";
    const Json& c = chains[i];
    Chain ch{needString(need(c, "id", p), p + ".id"), {}, {}};
    const Json& ws = need(c, "weights", p);
    if (!ws.is_array() || ws.empty()) fieldError(p + ".weights", "expected a nonempty array");
    for (std::size_t k = 0; k < ws.size(); ++k)
      ch.weights.push_back(needRational(ws[k], p + ".weights[" + std::to_string(k) + "]"));
    if (c.contains("headWeights")) {
      const Json& hw = c["headWeights"];
      if (!hw.is_array()) fieldError(p + ".headWeights", "expected an array");
      for (std::size_t k = 0; k < hw.size(); ++k)
        ch.headWeights.push_back(needRational(hw[k], p + ".headWeights[" + std::to_string(k) + "]"));
    }
    if (c.contains("period") && needInt(c["period"], p + ".period") != static_cast<long>(ch.weights.size()))
      fieldError(p + ".period", "does not match the number of weights");
    S.chains.push_back(std::move(ch));
  }
  auto chainOf = [&](const Json& x, const std::string& p) {
    auto id = needString(x, p);
    auto c = S.findChain(id);
    if (!c) fieldError(p, "unknown chain '" + id + "'");
    return *c;
  };
  auto relOf = [&](const Json& x, const std::string& p) {
    try {
      return parseRel(needString(x, p));
    } catch (const Error& e) {
      fieldError(p, e.what());
    }
  };
  if (j.contains("rel")) {
    const Json& rel = j["rel"];
    if (rel.contains("head")) {
      const Json& head = rel["head"];
      if (!head.is_array()) fieldError("rel.head", "expected an array");
      for (std::size_t i = 0; i < head.size(); ++i) {
        std::string p = "rel.head[" + std::to_string(i) + "]";
        const Json& e = head[i];
        if (!e.is_array() || e.size() != 5) fieldError(p, "expected [from, n, to, m, rel]");
        S.head.push_back({chainOf(e[0], p + "[0]"), needInt(e[1], p + "[1]"), chainOf(e[2], p + "[2]"),
                          needInt(e[3], p + "[3]"), relOf(e[4], p + "[4]")});
      }
    }
    if (rel.contains("periodic")) {
      const Json& per = rel["periodic"];
      if (!per.is_array()) fieldError("rel.periodic", "expected an array");
      for (std::size_t i = 0; i < per.size(); ++i) {
        std::string p = "rel.periodic[" + std::to_string(i) + "]";
        const Json& r = per[i];
        PeriodicRule rule;
        rule.from = chainOf(need(r, "from", p), p + ".from");
        rule.to = chainOf(need(r, "to", p), p + ".to");
        rule.rel = relOf(need(r, "rule", p), p + ".rule");
        if (r.contains("offsetRange")) rule.offset = rangeFromJson(r["offsetRange"], p + ".offsetRange");
        if (r.contains("fromRange")) rule.fromIndex = rangeFromJson(r["fromRange"], p + ".fromRange");
        if (r.contains("toRange")) rule.toIndex = rangeFromJson(r["toRange"], p + ".toRange");
        S.rules.push_back(rule);
      }
    }
  }
  return S;
}

Json systemToJson(const ChainSystem& S) {
  Json j;
  j["chains"] = Json::array();
  for (const auto& c : S.chains) {
    Json ws = Json::array(), hw = Json::array();
    for (const auto& w : c.weights) ws.push_back(toString(w));
    for (const auto& w : c.headWeights) hw.push_back(toString(w));
    j["chains"].push_back({{"id", c.id}, {"period", c.weights.size()}, {"weights", ws}, {"headWeights", hw}});
  }
  Json head = Json::array(), per = Json::array();
  for (const auto& e : S.head)
    head.push_back({S.chains[e.from].id, e.fromIndex, S.chains[e.to].id, e.toIndex, relName(e.rel)});
  for (const auto& r : S.rules) {
    Json x{{"from", S.chains[r.from].id}, {"to", S.chains[r.to].id}, {"rule", relName(r.rel)}};
    if (!unbounded(r.offset)) x["offsetRange"] = rangeToJson(r.offset);
    if (!unbounded(r.fromIndex)) x["fromRange"] = rangeToJson(r.fromIndex);
    if (!unbounded(r.toIndex)) x["toRange"] = rangeToJson(r.toIndex);
    per.push_back(x);
  }
  j["rel"] = {{"head", head}, {"periodic", per}};
  return j;
}

ShiftMap shiftFromJson(const ChainSystem& S, const Json& j) {
  ShiftMap g = identityShift(S);
  if (j.contains("tau")) {
    const Json& t = j["tau"];
    if (!t.is_object()) fieldError("tau", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto from = S.findChain(it.key());
      auto to = S.findChain(needString(it.value(), "tau." + it.key()));
      if (!from || !to) fieldError("tau." + it.key(), "unknown chain");
      g.tau[*from] = *to;
    }
  }
  if (j.contains("shift")) {
    const Json& s = j["shift"];
    if (!s.is_object()) fieldError("shift", "expected an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
      auto c = S.findChain(it.key());
      if (!c) fieldError("shift." + it.key(), "unknown chain");
      g.shift[*c] = needInt(it.value(), "shift." + it.key());
    }
  }
  if (j.contains("minIndex")) g.minIndex = needInt(j["minIndex"], "minIndex");
  return g;
}

Json shiftToJson(const ChainSystem& S, const ShiftMap& g) {
  Json tau = Json::object(), shift = Json::object();
  for (std::size_t i = 0; i < S.chainCount(); ++i) {
    tau[S.chains[i].id] = S.chains[g.tau[i]].id;
    shift[S.chains[i].id] = g.shift[i];
  }
  return {{"tau", tau}, {"shift", shift}, {"minIndex", g.minIndex}};
}

Json ubsToJson(const ChainSystem& S, const Ubs& u) {
  Json j = Json::object();
  for (std::size_t c = 0; c < u.parts.size(); ++c) {
    if (!u.parts[c]) continue;
    const auto& p = *u.parts[c];
    j[S.chains[c].id] = {{"from", p.lo}, {"to", p.hi ? Json(*p.hi) : Json(nullptr)}};
  }
  return j;
}

std::string ubsGraphDot(const ChainSystem& S, const UbsGraph& G) {
  std::ostringstream out;
  out << "digraph ubs {\n";
  for (std::size_t v = 0; v < G.classes.size(); ++v)
    out << "  v" << v << " [label=\"" << describe(S, G.representatives[v]) << "\"];\n";
  for (auto [u, v] : G.edges) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

Json pointToJson(const Pocset& P, const Point& x) { return Json(pointLabel(P, x)); }

Json setToJson(const Pocset& P, const Bits& s) { return Json(P.names(s)); }

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mediankit
