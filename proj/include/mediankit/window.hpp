#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mediankit/core.hpp"
#include "mediankit/pocset.hpp"
#include "mediankit/structure.hpp"

namespace mediankit {

inline constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

// A structure-preserving map defined on part of a pocset; kUndefined marks
// halfspaces outside the domain.
struct PartialMap {
  std::string name;
  std::vector<std::size_t> image;

  bool total() const;
};

struct Letter {
  std::size_t gen = 0;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
};

// u = l1 l2 ... lk acts as l1 after l2 after ... after lk.
using Word = std::vector<Letter>;

// A pocset together with generators acting on it, either totally or as
// partial maps on a finite window of a larger pocset.
class Action {
 public:
  Action() = default;
  Action(Pocset P, std::vector<PartialMap> gens);

  const Pocset& pocset() const { return pocset_; }
  std::size_t generatorCount() const { return gens_.size(); }
  const PartialMap& generator(std::size_t i) const { return gens_[i]; }
  bool isTotal() const { return total_; }

  std::optional<std::size_t> apply(const Letter& l, std::size_t h) const;
  std::optional<std::size_t> apply(const Word& w, std::size_t h) const;
  // All members must be in the domain.
  std::optional<Bits> applySet(const Word& w, const Bits& s) const;
  // Image point, completed by up-closure inside the window. nullopt when
  // the window does not determine it.
  std::optional<Point> applyPoint(const Word& w, const Point& x) const;

  std::string format(const Word& w) const;
  Word parse(const std::string& text) const;

  // Letters in search order: g0, g0^-1, g1, g1^-1, ...
  std::vector<Letter> alphabet() const;
  // Freely reduced words of length n in shortlex order.
  std::vector<Word> reducedWords(std::size_t n) const;

  // Permutation of a word on a total action.
  Automorphism evaluate(const Word& w) const;

 private:
  Pocset pocset_;
  std::vector<PartialMap> gens_;
  std::vector<std::vector<std::size_t>> inverses_;
  bool total_ = true;
};

Word inverseWord(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);
Word freeReduce(const Word& w);

// Each map injective and preserving star, order and weight where defined.
ValidationReport validateAction(const Action& A);

}  // namespace mediankit
