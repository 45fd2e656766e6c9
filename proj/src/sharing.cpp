#include "setsharing/sharing.hpp"

#include <stdexcept>
#include <vector>

namespace setsharing {

SharingSet star(const SharingSet& sh) {
  SharingSet closed = sh;
  std::vector<SharingGroup> frontier(sh.begin(), sh.end());
  while (!frontier.empty()) {
    std::vector<SharingGroup> next;
    for (const SharingGroup& s : frontier) {
      for (const SharingGroup& base : sh) {
        SharingGroup u = set_union(s, base);
        if (closed.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  return closed;
}

SharingSet rel(const VarSet& v, const SharingSet& sh) {
  SharingSet out;
  for (const SharingGroup& s : sh) {
    if (intersects(s, v)) out.insert(s);
  }
  return out;
}

SharingSet irel(const VarSet& v, const SharingSet& sh) {
  SharingSet out;
  for (const SharingGroup& s : sh) {
    if (!intersects(s, v)) out.insert(s);
  }
  return out;
}

SharingSet bin(const SharingSet& sh1, const SharingSet& sh2) {
  SharingSet out;
  for (const SharingGroup& s1 : sh1) {
    for (const SharingGroup& s2 : sh2) {
      out.insert(set_union(s1, s2));
    }
  }
  return out;
}

SSElement SSElement::pair(SharingSet sh, VarSet universe) {
  for (const SharingGroup& s : sh) {
    if (s.empty()) {
      throw std::invalid_argument("sharing groups must be nonempty");
    }
    if (!is_subset(s, universe)) {
      throw std::invalid_argument("sharing group not contained in the universe");
    }
  }
  SSElement e(Kind::Pair);
  e.sharing_ = std::move(sh);
  e.universe_ = std::move(universe);
  return e;
}

const SharingSet& SSElement::sharing() const {
  if (!is_pair()) throw std::logic_error("not a pair element");
  return sharing_;
}

const VarSet& SSElement::universe() const {
  if (!is_pair()) throw std::logic_error("not a pair element");
  return universe_;
}

bool operator==(const SSElement& a, const SSElement& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SSElement::Kind::Pair) return true;
  return a.universe_ == b.universe_ && a.sharing_ == b.sharing_;
}

bool leq(const SSElement& a, const SSElement& b) {
  if (a.is_bottom() || b.is_top()) return true;
  if (a.is_top()) return b.is_top();
  if (b.is_bottom()) return false;
  if (a.universe() != b.universe()) return false;
  for (const SharingGroup& s : a.sharing()) {
    if (!b.sharing().count(s)) return false;
  }
  return true;
}

SSElement lub(const SSElement& a, const SSElement& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (a.is_top() || b.is_top()) return SSElement::top();
  if (a.universe() != b.universe()) return SSElement::top();
  SharingSet joined = a.sharing();
  joined.insert(b.sharing().begin(), b.sharing().end());
  return SSElement::pair(std::move(joined), a.universe());
}

}  // namespace setsharing
