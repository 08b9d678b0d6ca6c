#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mediankit/chain_system.hpp"
#include "mediankit/window.hpp"

namespace mediankit {

struct ActionFixture {
  std::string name;
  std::string description;
  Action action;
  std::map<std::string, Point> namedPoints;
};

std::vector<std::string> actionFixtureNames();
// Throws INVALID_INPUT for unknown names.
ActionFixture actionFixture(const std::string& name);

// n nested walls prefix1 > prefix2 > ... with sides "prefixI" / "prefixI*".
Pocset pathPocset(std::size_t n, const std::string& prefix);
// Named point of a fixture, or anything parsePoint accepts.
Point fixturePoint(const ActionFixture& F, const std::string& spec);

struct SystemFixture {
  std::string name;
  std::string description;
  ChainSystem system;
  std::map<std::string, ShiftMap> shifts;
};

std::vector<std::string> systemFixtureNames();
SystemFixture systemFixture(const std::string& name);

// Random pocset whose halfspaces are subsets of a small ground set ordered
// by inclusion; at most maxWalls walls.
Pocset randomPocset(std::mt19937_64& rng, std::size_t maxWalls);

// Random consistent system; every pair of chains is independent, staircased
// one way or the other, or interleaved.
ChainSystem randomChainSystem(std::mt19937_64& rng, std::size_t chains);

// The four corners of the square-tiled plane, numbered (+,+), (-,+), (-,-),
// (+,-). Each corner carries the CORNER4 system with chains X and Y.
struct PlaneMap {
  int quarterTurns = 0;  // applied first
  long dx = 0, dy = 0;
};
int cornerSign(std::size_t corner, int axis);
std::size_t cornerImage(const PlaneMap& m, std::size_t corner);
// The induced map from the corner's system to the image corner's system.
ShiftMap cornerShift(const PlaneMap& m, std::size_t corner);

}  // namespace mediankit
