#pragma once

#include <string>

#include "json.hpp"
#include "mediankit/boundary.hpp"
#include "mediankit/chain_system.hpp"
#include "mediankit/pocset.hpp"
#include "mediankit/structure.hpp"
#include "mediankit/window.hpp"

namespace mediankit {

using Json = nlohmann::ordered_json;

// Parse errors carry the line and column; missing or mistyped fields are
// named by path. Both raise INVALID_INPUT.
Json readJsonFile(const std::string& path);
Json parseJson(const std::string& text);

Pocset pocsetFromJson(const Json& j);
Json pocsetToJson(const Pocset& P);

Automorphism automorphismFromJson(const Pocset& P, const Json& j);
Json automorphismToJson(const Pocset& P, const Automorphism& g);

// Either {"pocset": {...}, "maps": [...]} or the pocset fields inline.
Action actionFromJson(const Json& j);
Json actionToJson(const Action& A);

ChainSystem systemFromJson(const Json& j);
Json systemToJson(const ChainSystem& S);

ShiftMap shiftFromJson(const ChainSystem& S, const Json& j);
Json shiftToJson(const ChainSystem& S, const ShiftMap& g);

Json ubsToJson(const ChainSystem& S, const Ubs& u);
std::string ubsGraphDot(const ChainSystem& S, const UbsGraph& G);

Json pointToJson(const Pocset& P, const Point& x);
Json setToJson(const Pocset& P, const Bits& s);

// 64-bit FNV-1a, hex.
std::string digest(const std::string& bytes);

}  // namespace mediankit
