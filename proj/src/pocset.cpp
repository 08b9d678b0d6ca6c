#include "mediankit/pocset.hpp"

#include "mediankit/errors.hpp"

namespace mediankit {

std::optional<std::size_t> Pocset::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Pocset::at(const std::string& name) const {
  auto h = find(name);
  if (!h) throw Error(ErrorCode::InvalidInput, "unknown halfspace '" + name + "'");
  return *h;
}

Bits Pocset::starOf(const Bits& s) const {
  Bits out(size());
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) out.set(star_[h]);
  return out;
}

std::vector<std::string> Pocset::names(const Bits& s) const {
  std::vector<std::string> out;
  for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) out.push_back(names_[h]);
  return out;
}

std::string Pocset::describe(const Bits& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names(s)) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

std::size_t PocsetBuilder::intern(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  std::size_t h = names_.size();
  names_.push_back(name);
  index_.emplace(name, h);
  return h;
}

PocsetBuilder& PocsetBuilder::addWall(const std::string& id, const std::string& pos,
                                      const std::string& neg, Rational weight) {
  if (index_.count(pos) || (pos != neg && index_.count(neg)))
    throw Error(ErrorCode::InvalidInput, "halfspace of wall '" + id + "' declared twice");
  Wall w;
  w.id = id;
  w.pos = intern(pos);
  w.neg = intern(neg);
  w.weight = weight;
  walls_.push_back(w);
  return *this;
}

std::size_t PocsetBuilder::halfspace(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::InvalidInput, "unknown halfspace '" + name + "'");
  return it->second;
}

PocsetBuilder& PocsetBuilder::addOrder(const std::string& h, const std::string& k) {
  return addOrder(halfspace(h), halfspace(k));
}

PocsetBuilder& PocsetBuilder::addOrder(std::size_t h, std::size_t k) {
  order_.emplace_back(h, k);
  return *this;
}

Pocset PocsetBuilder::build(bool dualize) const {
  Pocset p;
  const std::size_t n = names_.size();
  p.names_ = names_;
  p.index_ = index_;
  p.walls_ = walls_;
  p.star_.assign(n, 0);
  p.wallOf_.assign(n, 0);
  for (std::size_t w = 0; w < walls_.size(); ++w) {
    p.star_[walls_[w].pos] = walls_[w].neg;
    p.star_[walls_[w].neg] = walls_[w].pos;
    p.wallOf_[walls_[w].pos] = w;
    p.wallOf_[walls_[w].neg] = w;
  }
  p.up_.assign(n, Bits(n));
  for (std::size_t h = 0; h < n; ++h) p.up_[h].set(h);
  for (auto [h, k] : order_) {
    p.up_[h].set(k);
    if (dualize) p.up_[p.star_[k]].set(p.star_[h]);
  }
  // Warshall closure on rows
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && p.up_[i][k]) p.up_[i] |= p.up_[k];
  p.down_.assign(n, Bits(n));
  for (std::size_t h = 0; h < n; ++h)
    for (auto k = p.up_[h].find_first(); k != Bits::npos; k = p.up_[h].find_next(k))
      p.down_[k].set(h);
  return p;
}

}  // namespace mediankit
