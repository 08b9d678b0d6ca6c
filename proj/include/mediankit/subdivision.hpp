#pragma once

#include <vector>

#include "mediankit/pocset.hpp"
#include "mediankit/structure.hpp"

namespace mediankit {

struct Subdivision {
  Pocset parent;
  Pocset child;
  std::vector<std::size_t> projection;  // child halfspace -> parent halfspace
  std::vector<std::size_t> minus;       // parent halfspace a -> a-
  std::vector<std::size_t> plus;        // parent halfspace a -> a+

  Point embed(const Point& x) const;
  // Image of a set of child halfspaces under the projection.
  Bits project(const Bits& s) const;
};

// Every wall is split in two; child walls carry half the weight.
Subdivision subdivide(const Pocset& P);

// g'(a+-) = (g a)+-
Automorphism lift(const Subdivision& S, const Automorphism& g);

bool isNewPoint(const Subdivision& S, const Point& x);

struct CubeVertex {
  std::vector<int> coords;
  Point point;
};

struct CubeAt {
  std::size_t k = 0;
  std::vector<std::size_t> halfspaces;  // chosen parent halfspaces a_1..a_k
  std::vector<CubeVertex> corners;      // {-1,1}^k into the parent
  std::vector<CubeVertex> cube;         // {-1,0,1}^k into the child
};

// Throws NOT_A_NEW_POINT for points in the image of the parent.
CubeAt cubeAt(const Subdivision& S, const Point& x);

// Largest wall weight.
Rational maxAtom(const Pocset& P);

// Walls allowed at the last stage of a tower.
inline constexpr std::size_t kTowerWallCap = 4096;

// Stage i subdivides stage i-1; element 0 has parent == child == P.
std::vector<Subdivision> tower(const Pocset& P, std::size_t depth);

// Embedding of a point of the tower base into stage `stage`.
Point embedInto(const std::vector<Subdivision>& T, std::size_t stage, const Point& x);

}  // namespace mediankit
