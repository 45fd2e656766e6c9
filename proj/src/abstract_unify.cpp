#include "setsharing/abstract_unify.hpp"

#include <stdexcept>

namespace setsharing {

SharingSet amgu(const SharingSet& sh, const Binding& b) {
  VarSet vx;
  vx.insert(b.lhs);
  VarSet vr = b.rhs.vars();

  SharingSet a = rel(vx, sh);
  SharingSet bs = rel(vr, sh);

  SharingSet out;
  VarSet both = set_union(vx, vr);
  for (const SharingGroup& s : sh) {
    if (!intersects(s, both)) out.insert(s);
  }
  for (SharingGroup& s : bin(star(a), star(bs))) out.insert(std::move(s));
  return out;
}

SSElement amgu(const SSElement& e, const Binding& b) {
  if (!e.is_pair()) {
    throw std::logic_error("amgu on a lattice element needs a pair");
  }
  VarSet binding_vars = b.rhs.vars();
  binding_vars.insert(b.lhs);
  VarSet fresh = set_diff(binding_vars, e.universe());

  SharingSet sh = e.sharing();
  for (Variable u : fresh) {
    SharingGroup singleton;
    singleton.insert(u);
    sh.insert(std::move(singleton));
  }
  return SSElement::pair(amgu(sh, b), set_union(e.universe(), fresh));
}

SSElement aunify(const SSElement& e, const Substitution& nu, EqualityMode mode) {
  if (e.is_bottom() || e.is_top()) return e;
  if (!is_rsubst(nu)) {
    throw std::invalid_argument("aunify requires rational solved form");
  }
  // One satisfiability gate for the whole substitution: subsets of a
  // satisfiable substitution in rational solved form stay satisfiable
  // in both theories.
  if (!satisfiable(nu, mode)) return SSElement::bottom();
  SSElement cur = e;
  for (const auto& [x, r] : nu.entries()) {
    cur = amgu(cur, Binding(x, r));
  }
  return cur;
}

}  // namespace setsharing
