#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mediankit/rational.hpp"

namespace mediankit {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// An ultrafilter, stored as the set of halfspace indices it contains.
using Point = Bits;

struct Wall {
  std::string id;
  std::size_t pos = 0;
  std::size_t neg = 0;
  Rational weight{1};
};

// Finite pocset with weighted walls. Halfspaces are dense indices; the
// order is stored as up-sets and down-sets.
class Pocset {
 public:
  Pocset() = default;

  std::size_t size() const { return names_.size(); }
  std::size_t wallCount() const { return walls_.size(); }
  const std::vector<Wall>& walls() const { return walls_; }
  const Wall& wall(std::size_t w) const { return walls_[w]; }

  std::size_t star(std::size_t h) const { return star_[h]; }
  std::size_t wallOf(std::size_t h) const { return wallOf_[h]; }
  const std::string& name(std::size_t h) const { return names_[h]; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t at(const std::string& name) const;

  bool leq(std::size_t h, std::size_t k) const { return up_[h][k]; }
  bool less(std::size_t h, std::size_t k) const { return h != k && up_[h][k]; }
  bool comparable(std::size_t h, std::size_t k) const { return up_[h][k] || up_[k][h]; }
  const Bits& up(std::size_t h) const { return up_[h]; }
  const Bits& down(std::size_t h) const { return down_[h]; }

  Rational weightOf(std::size_t h) const { return walls_[wallOf_[h]].weight; }

  Bits emptySet() const { return Bits(size()); }
  Bits starOf(const Bits& s) const;
  std::vector<std::string> names(const Bits& s) const;
  std::string describe(const Bits& s) const;

 private:
  friend class PocsetBuilder;
  std::vector<std::string> names_;
  std::vector<std::size_t> star_;
  std::vector<std::size_t> wallOf_;
  std::vector<Wall> walls_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::unordered_map<std::string, std::size_t> index_;
};

class PocsetBuilder {
 public:
  // pos == neg gives a halfspace fixed by the involution (rejected by validate).
  PocsetBuilder& addWall(const std::string& id, const std::string& pos, const std::string& neg,
                         Rational weight = Rational(1));
  // h is contained in k
  PocsetBuilder& addOrder(const std::string& h, const std::string& k);
  PocsetBuilder& addOrder(std::size_t h, std::size_t k);
  std::size_t halfspace(const std::string& name) const;
  std::size_t size() const { return names_.size(); }

  // Takes the reflexive-transitive closure. With dualize, every pair h<=k
  // also adds k*<=h* before closing.
  Pocset build(bool dualize = true) const;

 private:
  std::size_t intern(const std::string& name);
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Wall> walls_;
  std::vector<std::pair<std::size_t, std::size_t>> order_;
};

}  // namespace mediankit
