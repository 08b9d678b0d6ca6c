#include "mediankit/window.hpp"

#include <cctype>
#include <sstream>

#include "mediankit/errors.hpp"

namespace mediankit {

bool PartialMap::total() const {
  for (auto t : image)
    if (t == kUndefined) return false;
  return true;
}

Action::Action(Pocset P, std::vector<PartialMap> gens) : pocset_(std::move(P)), gens_(std::move(gens)) {
  const std::size_t n = pocset_.size();
  for (const auto& g : gens_) {
    if (g.image.size() != n)
      throw Error(ErrorCode::InvalidInput, "map '" + g.name + "' has the wrong size");
    std::vector<std::size_t> inv(n, kUndefined);
    for (std::size_t h = 0; h < n; ++h) {
      if (g.image[h] == kUndefined) continue;
      if (g.image[h] >= n || inv[g.image[h]] != kUndefined)
        throw Error(ErrorCode::InvalidInput, "map '" + g.name + "' is not injective");
      inv[g.image[h]] = h;
    }
    inverses_.push_back(std::move(inv));
    if (!g.total()) total_ = false;
  }
}

std::optional<std::size_t> Action::apply(const Letter& l, std::size_t h) const {
  std::size_t t = l.inverse ? inverses_[l.gen][h] : gens_[l.gen].image[h];
  if (t == kUndefined) return std::nullopt;
  return t;
}

std::optional<std::size_t> Action::apply(const Word& w, std::size_t h) const {
  std::size_t cur = h;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto next = apply(*it, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<Bits> Action::applySet(const Word& w, const Bits& s) const {
  Bits out = pocset_.emptySet();
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) {
    auto t = apply(w, h);
    if (!t) return std::nullopt;
    out.set(*t);
  }
  return out;
}

std::optional<Point> Action::applyPoint(const Word& w, const Point& x) const {
  Bits img = pocset_.emptySet();
  for (auto h = x.find_first(); h != Bits::npos; h = x.find_next(h)) {
    auto t = apply(w, h);
    if (t) img.set(*t);
  }
  img = upClosure(pocset_, img);
  if (!isUltrafilter(pocset_, img)) return std::nullopt;
  return img;
}

std::string Action::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long k = static_cast<long>(j - i);
    if (!out.empty()) out += " ";
    out += gens_[w[i].gen].name;
    if (w[i].inverse) k = -k;
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

Word Action::parse(const std::string& text) const {
  auto findGen = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t g = 0; g < gens_.size(); ++g)
      if (gens_[g].name == name) return g;
    return std::nullopt;
  };
  Word out;
  std::string spaced = text;
  for (char& c : spaced)
    if (c == '.' || c == '*') c = ' ';
  std::stringstream ss(spaced);
  std::string tok;
  while (ss >> tok) {
    if (tok == "1") continue;
    std::string base = tok;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stol(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad exponent in '" + tok + "'");
      }
    }
    Word piece;
    if (auto g = findGen(base)) {
      piece.push_back({*g, false});
    } else {
      // juxtaposed one-letter generators; an upper-case letter is the
      // inverse of its lower-case generator
      for (char c : base) {
        std::string one(1, c);
        if (auto g1 = findGen(one)) {
          piece.push_back({*g1, false});
        } else if (auto g2 = findGen(std::string(1, static_cast<char>(std::tolower(c))));
                   g2 && std::isupper(static_cast<unsigned char>(c))) {
          piece.push_back({*g2, true});
        } else {
          throw Error(ErrorCode::InvalidInput, "unknown generator in word '" + tok + "'");
        }
      }
    }
    Word powered = power(piece, static_cast<int>(exp));
    out.insert(out.end(), powered.begin(), powered.end());
  }
  return out;
}

std::vector<Letter> Action::alphabet() const {
  std::vector<Letter> out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    out.push_back({g, false});
    out.push_back({g, true});
  }
  return out;
}

std::vector<Word> Action::reducedWords(std::size_t n) const {
  std::vector<Word> cur{Word{}};
  auto letters = alphabet();
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<Word> next;
    for (const auto& w : cur)
      for (const auto& l : letters) {
        if (!w.empty() && w.back().gen == l.gen && w.back().inverse != l.inverse) continue;
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur;
}

Automorphism Action::evaluate(const Word& w) const {
  Automorphism out{format(w), std::vector<std::size_t>(pocset_.size())};
  for (std::size_t h = 0; h < pocset_.size(); ++h) {
    auto t = apply(w, h);
    if (!t) throw Error(ErrorCode::OutOfWindow, "word " + format(w) + " leaves the window");
    out.map[h] = *t;
  }
  return out;
}

Word inverseWord(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, !it->inverse});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return freeReduce(out);
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverseWord(w) : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return freeReduce(out);
}

Word freeReduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

ValidationReport validateAction(const Action& A) {
  ValidationReport rep = validate(A.pocset());
  const Pocset& P = A.pocset();
  for (std::size_t g = 0; g < A.generatorCount(); ++g) {
    const auto& m = A.generator(g);
    for (std::size_t h = 0; h < P.size(); ++h) {
      if (m.image[h] == kUndefined) continue;
      std::size_t t = m.image[h];
      std::size_t ts = m.image[P.star(h)];
      if (ts == kUndefined || ts != P.star(t))
        rep.violations.push_back({"map does not commute with star", m.name + " at " + P.name(h)});
      if (P.weightOf(h) != P.weightOf(t))
        rep.violations.push_back({"map changes weight", m.name + " at " + P.name(h)});
      for (std::size_t k = 0; k < P.size(); ++k) {
        if (m.image[k] == kUndefined) continue;
        if (P.leq(h, k) != P.leq(t, m.image[k]))
          rep.violations.push_back(
              {"map does not preserve order", m.name + " at " + P.name(h) + "," + P.name(k)});
      }
    }
  }
  return rep;
}

}  // namespace mediankit
