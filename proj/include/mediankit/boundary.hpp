#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mediankit/chain_system.hpp"

namespace mediankit {

struct IndexInterval {
  long lo = 0;
  std::optional<long> hi;  // nullopt: the whole tail from lo
  bool infinite() const { return !hi; }
  bool contains(long n) const { return n >= lo && (!hi || n <= *hi); }
  bool operator==(const IndexInterval&) const = default;
};

// A set of chain halfspaces given per chain as an interval of indices.
struct Ubs {
  std::vector<std::optional<IndexInterval>> parts;

  bool contains(ChainIndex a) const { return parts[a.chain] && parts[a.chain]->contains(a.index); }
  std::vector<std::size_t> infiniteChains() const;
  bool operator==(const Ubs&) const = default;
};

Ubs emptyUbs(const ChainSystem& S);
Ubs tail(const ChainSystem& S, std::size_t chain, long from);
Ubs unite(const Ubs& a, const Ubs& b);  // per-chain hull of the two parts
std::string describe(const ChainSystem& S, const Ubs& u);

Ubs inseparableClosure(const ChainSystem& S, const Ubs& seed);

struct Containment {
  bool contained = false;
  std::optional<Rational> differenceMeasure;  // set when contained
};
Containment almostContained(const ChainSystem& S, const Ubs& a, const Ubs& b);
bool equivalent(const ChainSystem& S, const Ubs& a, const Ubs& b);

// Intersection meets every chain finitely.
bool almostDisjoint(const ChainSystem& S, const Ubs& a, const Ubs& b);
// Largest distance from the basepoint reached inside the intersection, a
// lower bound given by the chain halfspaces in front of each member;
// nullopt when unbounded.
std::optional<Rational> intersectionReach(const ChainSystem& S, const Ubs& a, const Ubs& b);

// Minimum chain cover of a finite poset by maximum bipartite matching.
std::vector<std::vector<std::size_t>> minChainCover(std::size_t n,
                                                    const std::function<bool(std::size_t, std::size_t)>& less);
std::vector<std::vector<ChainIndex>> dilworthChains(const ChainSystem& S, const std::vector<ChainIndex>& D);
std::vector<ChainIndex> members(const Ubs& u);  // finite parts only

struct MinimalTail {
  long index = 0;
  Ubs ubs;
};
MinimalTail minimalTail(const ChainSystem& S, std::size_t chain);

struct UbsGraph {
  std::vector<std::vector<std::size_t>> classes;  // chains of each vertex
  std::vector<std::size_t> representativeChain;
  std::vector<Ubs> representatives;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t rankProxy = 0;  // largest antichain of a truncation
  bool acyclic = false;
  bool reachabilityGivesEdge = false;

  bool hasEdge(std::size_t u, std::size_t v) const;
};
// Almost every halfspace of chain i is transverse to almost every halfspace
// of chain j.
bool almostTransverse(const ChainSystem& S, std::size_t i, std::size_t j);
UbsGraph ubsGraph(const ChainSystem& S);
// Index of the vertex whose chains are all infinite in u, for each vertex.
std::vector<std::size_t> minimalClassesBelow(const UbsGraph& G, const Ubs& u);

struct PosetElement {
  std::vector<std::size_t> vertices;
  Ubs representative;
};
std::vector<PosetElement> ubsPoset(const ChainSystem& S);

// Throws CLASS_NOT_PRESERVED.
Rational transferCharacter(const ChainSystem& S, const Ubs& omega, const ShiftMap& g);
// Throws CLASS_PERMUTED.
std::vector<Rational> chiVector(const ChainSystem& S, const ShiftMap& g);
bool inKernel(const ChainSystem& S, const ShiftMap& g);

}  // namespace mediankit
