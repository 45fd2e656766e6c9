#include "setsharing/abstraction.hpp"

#include <stdexcept>

namespace setsharing {

namespace {

void require_rsubst(const Substitution& sigma, const char* who) {
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument(std::string(who) + " requires rational solved form");
  }
}

void require_idempotent(const Substitution& sigma, const char* who) {
  if (!is_idempotent(sigma)) {
    throw std::invalid_argument(std::string(who) + " requires an idempotent substitution");
  }
}

// Quantification over all of Vars collapses to {v} u vars(sigma):
// any other y has y sigma = y and can only contribute {y} n U = empty.
VarSet candidates(const Substitution& sigma, Variable v) {
  VarSet out = sigma.variables();
  out.insert(v);
  return out;
}

VarSet occ_step(const Substitution& sigma, const VarSet& candidate_vars,
                const VarSet& prev) {
  VarSet next;
  for (Variable y : candidate_vars) {
    if (intersects(apply(y, sigma).vars(), prev)) next.insert(y);
  }
  return next;
}

SSElement alpha_from(const Substitution& sigma, const VarSet& universe,
                     VarSet (*groups_of)(const Substitution&, Variable)) {
  SharingSet sh;
  VarSet relevant = set_union(universe, sigma.variables());
  for (Variable v : relevant) {
    VarSet group = set_intersect(groups_of(sigma, v), universe);
    if (!group.empty()) sh.insert(std::move(group));
  }
  return SSElement::pair(std::move(sh), universe);
}

}  // namespace

VarSet sg_unchecked(const Substitution& sigma, Variable v) {
  VarSet out;
  for (Variable y : candidates(sigma, v)) {
    if (apply(y, sigma).contains(v)) out.insert(y);
  }
  return out;
}

VarSet sg(const Substitution& sigma, Variable v) {
  require_idempotent(sigma, "sg");
  return sg_unchecked(sigma, v);
}

SSElement alpha_classical_unchecked(const Substitution& sigma,
                                    const VarSet& universe) {
  return alpha_from(sigma, universe, &sg_unchecked);
}

SSElement alpha_classical(const Substitution& sigma, const VarSet& universe) {
  require_idempotent(sigma, "alpha_classical");
  return alpha_classical_unchecked(sigma, universe);
}

VarSet occ_n(const Substitution& sigma, Variable v, unsigned n) {
  require_rsubst(sigma, "occ_n");
  VarSet cur;
  if (!sigma.binds(v)) cur.insert(v);
  if (n == 0) return cur;
  VarSet cand = candidates(sigma, v);
  for (unsigned i = 1; i <= n; ++i) cur = occ_step(sigma, cand, cur);
  return cur;
}

VarSet occ(const Substitution& sigma, Variable v) {
  require_rsubst(sigma, "occ");
  VarSet cur;
  if (!sigma.binds(v)) cur.insert(v);
  VarSet cand = candidates(sigma, v);
  const std::size_t cap = sigma.variables().size() + 2;
  for (std::size_t i = 0; i < cap; ++i) {
    VarSet next = occ_step(sigma, cand, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::logic_error("occurrence chain failed to stabilize within its bound");
}

SSElement alpha(const Substitution& sigma, const VarSet& universe) {
  require_rsubst(sigma, "alpha");
  return alpha_from(sigma, universe, &occ);
}

SSElement alpha_set(const std::vector<Substitution>& sigmas,
                    const VarSet& universe) {
  SSElement out = SSElement::bottom();
  for (const Substitution& sigma : sigmas) {
    out = lub(out, alpha(sigma, universe));
  }
  return out;
}

}  // namespace setsharing
