#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mediankit/pocset.hpp"

namespace mediankit {

// All four pairs of sides are incomparable.
bool transverse(const Pocset& P, std::size_t h, std::size_t k);

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> walls;  // lexicographically least maximum clique
};

// Walls transverse to some other wall are capped at 64 (WALL_BUDGET_EXCEEDED).
RankResult rankWithClique(const Pocset& P);
std::size_t rank(const Pocset& P);

// Restriction to a set of walls (indices into P.walls()).
Pocset restrictToWalls(const Pocset& P, const std::vector<std::size_t>& walls);

struct Decomposition {
  std::vector<Pocset> factors;
  std::vector<std::vector<std::size_t>> factorWalls;  // parent wall indices
  // parent halfspace -> (factor index, halfspace index inside factor)
  std::vector<std::pair<std::size_t, std::size_t>> assignment;
};

Decomposition decompose(const Pocset& P);

// Disjoint union with every cross pair transverse. Prefixes are applied to
// all names of the corresponding factor.
Pocset product(const Pocset& A, const Pocset& B, const std::string& prefixA = "",
               const std::string& prefixB = "");

// Projection of a point onto a factor.
Point projectToFactor(const Decomposition& D, std::size_t factor, const Point& x);

struct Automorphism {
  std::string name;
  std::vector<std::size_t> map;  // halfspace -> halfspace
};

Automorphism identity(const Pocset& P);
Automorphism compose(const Automorphism& g, const Automorphism& h);  // g after h
Automorphism inverse(const Automorphism& g);
bool sameMap(const Automorphism& g, const Automorphism& h);
bool isAutomorphism(const Pocset& P, const std::vector<std::size_t>& map);
Point applyToPoint(const Automorphism& g, const Point& x);
Bits applyToSet(const Automorphism& g, const Bits& s);

// Full automorphism group, identity first.
std::vector<Automorphism> automorphisms(const Pocset& P);

// perm[i] = index of the factor that g maps factor i onto.
std::vector<std::size_t> factorPermutation(const Pocset& P, const Decomposition& D,
                                           const Automorphism& g);

}  // namespace mediankit
