#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mediankit/core.hpp"
#include "mediankit/rational.hpp"

namespace mediankit {

// Relation of the first halfspace to the second.
enum class Rel { Sub, Sup, Transverse };
std::string relName(Rel r);
Rel parseRel(const std::string& s);
Rel invert(Rel r);

struct Range {
  std::optional<long> lo, hi;  // inclusive, nullopt = unbounded
  bool contains(long v) const { return (!lo || v >= *lo) && (!hi || v <= *hi); }
};

struct Chain {
  std::string id;
  std::vector<Rational> headWeights;
  std::vector<Rational> weights;  // repeated after the head
};

struct HeadRel {
  std::size_t from = 0;
  long fromIndex = 0;
  std::size_t to = 0;
  long toIndex = 0;
  Rel rel = Rel::Transverse;
};

// Applies to (from, n) against (to, m) when every range matches; the
// offset is m - n.
struct PeriodicRule {
  std::size_t from = 0, to = 0;
  Rel rel = Rel::Transverse;
  Range offset, fromIndex, toIndex;
};

// Halfspace n of chain `chain`.
struct ChainIndex {
  std::size_t chain = 0;
  long index = 0;
  bool operator==(const ChainIndex&) const = default;
  auto operator<=>(const ChainIndex&) const = default;
};

// Eventually periodic presentation of the halfspaces separating a basepoint
// from a boundary point. Chains are strictly decreasing.
class ChainSystem {
 public:
  std::vector<Chain> chains;
  std::vector<HeadRel> head;
  std::vector<PeriodicRule> rules;

  std::size_t chainCount() const { return chains.size(); }
  std::optional<std::size_t> findChain(const std::string& id) const;
  std::size_t chainAt(const std::string& id) const;

  // Only entries written in this orientation.
  std::optional<Rel> lookupDirected(ChainIndex a, ChainIndex b) const;
  std::optional<Rel> lookup(ChainIndex a, ChainIndex b) const;
  // Throws INVALID_INPUT where undefined.
  Rel rel(ChainIndex a, ChainIndex b) const;
  Rational weight(ChainIndex a) const;
  bool leq(ChainIndex a, ChainIndex b) const;

  // Beyond this index every rule and weight is in its periodic regime.
  long stableIndex() const;
  // Offsets of larger absolute value all fall under the outermost rule.
  long offsetReach() const;
  long weightPeriod() const;
  // head + 2 lcm(periods), plus the offset reach.
  long searchHorizon() const;

  std::string name(ChainIndex a) const;
};

// Halfspaces with index < length on every chain.
std::vector<ChainIndex> truncation(const ChainSystem& S, long length);

ValidationReport validateSystem(const ChainSystem& S);

// Chain permutation and index shifts: (i, n) -> (tau[i], n + shift[i]) for
// n >= minIndex.
struct ShiftMap {
  std::vector<std::size_t> tau;
  std::vector<long> shift;
  long minIndex = 0;

  ChainIndex apply(ChainIndex a) const { return {tau[a.chain], a.index + shift[a.chain]}; }
};

ShiftMap identityShift(const ChainSystem& S);
ShiftMap composeShift(const ShiftMap& g, const ShiftMap& h);  // g after h
// Preservation of relations and weights from `from` to `to` over a block of
// indices covering the periodic regime.
ValidationReport validateShift(const ChainSystem& from, const ChainSystem& to, const ShiftMap& g);

}  // namespace mediankit
