#pragma once

#include <boost/container/flat_set.hpp>

#include "setsharing/term.hpp"

namespace setsharing {

/// A sharing group is a nonempty finite set of variables; a sharing set
/// is a finite family of groups. Both stay sorted, so equality is
/// structural.
using SharingGroup = VarSet;
using SharingSet = boost::container::flat_set<SharingGroup>;

/// Closure under union: all unions of one or more groups of sh,
/// computed as the least fixpoint of pairwise unions.
SharingSet star(const SharingSet& sh);

/// The groups of sh that meet V.
SharingSet rel(const VarSet& v, const SharingSet& sh);
/// The groups of sh disjoint from V.
SharingSet irel(const VarSet& v, const SharingSet& sh);

/// Pairwise unions {S1 u S2 | S1 in sh1, S2 in sh2}.
SharingSet bin(const SharingSet& sh1, const SharingSet& sh2);

/// The set-sharing lattice element: bottom, top, or a pair of a sharing
/// set and the universe of variables of interest, with every group
/// contained in the universe.
class SSElement {
 public:
  enum class Kind { Bottom, Top, Pair };

  static SSElement bottom() { return SSElement(Kind::Bottom); }
  static SSElement top() { return SSElement(Kind::Top); }
  /// Throws when a group is empty or not contained in the universe.
  static SSElement pair(SharingSet sh, VarSet universe);

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_pair() const { return kind_ == Kind::Pair; }

  const SharingSet& sharing() const;
  const VarSet& universe() const;

  friend bool operator==(const SSElement& a, const SSElement& b);
  friend bool operator!=(const SSElement& a, const SSElement& b) {
    return !(a == b);
  }

 private:
  explicit SSElement(Kind kind) : kind_(kind) {}

  Kind kind_;
  SharingSet sharing_;
  VarSet universe_;
};

/// bottom <= d <= top; two pairs compare only at equal universes, by
/// inclusion of the sharing sets.
bool leq(const SSElement& a, const SSElement& b);

/// Least upper bound: bottom is the unit, top absorbs, equal-universe
/// pairs join by union, and pairs over different universes have no pair
/// above them, so they join to top.
SSElement lub(const SSElement& a, const SSElement& b);

}  // namespace setsharing
