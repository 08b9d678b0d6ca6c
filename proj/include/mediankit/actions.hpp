#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mediankit/core.hpp"
#include "mediankit/window.hpp"

namespace mediankit {

// Walls whose two sides g exchanges.
std::vector<std::size_t> wallInversions(const Action& A, const Word& g);

// Orbit of x under the generated group, in discovery order.
std::vector<Point> orbit(const Action& A, const Point& x);

struct OrbitResult {
  std::vector<Point> orbit;
  std::size_t size = 0;
  std::size_t bound = 0;  // 2^rank
};
// Total actions only.
OrbitResult minOrbit(const Action& A);

struct NestedResult {
  Word word;
  std::size_t halfspace = 0;
  Rational displacement;
  Rational threshold;
};
// Throws DISPLACEMENT_TOO_SMALL or OUT_OF_WINDOW.
NestedResult findNested(const Action& A, const Point& x, const Word& g);

enum class FlipKind { Flipped, InvariantSet, Inconclusive };

struct FlipResult {
  FlipKind kind = FlipKind::Inconclusive;
  Word word;                       // Flipped
  Bits invariantSigma;             // InvariantSet: halfspaces cut out by the set
  std::vector<Point> invariantPoints;
  std::size_t maxLength = 0;       // Inconclusive
  std::size_t skippedWords = 0;    // words that left the window
};
FlipResult findFlip(const Action& A, std::size_t h, std::size_t maxLen);

// Words g with g k strictly inside h, shortest then shortlex. Requires h <= k.
std::optional<Word> doubleSkewer(const Action& A, std::size_t h, std::size_t k, std::size_t maxLen);

bool disjointHalfspaces(const Pocset& P, std::size_t h, std::size_t k);
bool stronglySeparated(const Pocset& P, std::size_t h, std::size_t k);

// Pairwise disjoint halfspaces on distinct walls, searched in index order.
std::optional<std::vector<std::size_t>> facingTuple(const Pocset& P, std::size_t n,
                                                    std::optional<std::size_t> seed = std::nullopt,
                                                    bool strong = false);

struct FacingResult {
  std::vector<std::size_t> tuple;
  std::vector<Word> upgrades;  // words used by the skewer upgrade, in order
};
// Starts from a triple and enlarges it by translating two members into the
// last one. nullopt when no triple exists or no upgrade word of length
// <= maxLen works.
std::optional<FacingResult> facingTuple(const Action& A, std::size_t n, std::size_t maxLen,
                                        std::optional<std::size_t> seed = std::nullopt,
                                        bool strong = false);

struct SectorResult {
  bool productWitness = false;
  std::size_t halfspace = 0;  // inside sectorH and sectorK
  std::size_t sectorH = 0;    // h or h*
  std::size_t sectorK = 0;    // k or k*
  Bits part;                  // product witness: halfspaces tied to h's wall
  bool partMatchesFactors = false;
};
// Throws NOT_TRANSVERSE.
SectorResult sectorHalfspace(const Pocset& P, std::size_t h, std::size_t k);

struct FreeCertificate {
  Word a, b;
  std::size_t h = 0, k = 0;
  std::vector<std::string> facts;
  std::size_t requestedDepth = 0;
  std::size_t depth = 0;  // lower than requested when words left the window
  std::size_t wordsChecked = 0;
};
// Throws NOT_FACING, INCLUSION_FAILED or OUT_OF_WINDOW.
FreeCertificate pingpong(const Action& A, const Word& a, const Word& b, std::size_t h, std::size_t k,
                         std::size_t maxLen);

enum class Verdict { RollerElementary, RollerMinimalCore, FreeSubgroup, Inconclusive };
std::string verdictName(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Inconclusive;
  int stage = 0;
  std::string witness;
  std::vector<Point> orbit;
  ConvexSet core;
  std::optional<FreeCertificate> certificate;
};
ClassificationReport classify(const Action& A, std::size_t maxLen);

// Unordered pairs of points separated by every wall.
std::vector<std::pair<Point, Point>> linealPairs(const Pocset& P);

}  // namespace mediankit
