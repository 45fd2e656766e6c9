#pragma once

#include <initializer_list>

#include "doctest.h"

#include "setsharing/abstract_unify.hpp"
#include "setsharing/abstraction.hpp"
#include "setsharing/printer.hpp"
#include "setsharing/sharing.hpp"
#include "setsharing/substitution.hpp"
#include "setsharing/term.hpp"
#include "setsharing/unify.hpp"
#include "setsharing/vsubst.hpp"

namespace testutil {

using namespace setsharing;

inline Term vt(Variable v) { return Term::var(v); }
inline Term a() { return Term::make("a"); }
inline Term f(Term t) { return Term::make("f", {std::move(t)}); }
inline Term g(Term t, Term u) { return Term::make("g", {std::move(t), std::move(u)}); }
inline Term p(Term t, Term u) { return Term::make("p", {std::move(t), std::move(u)}); }

inline VarSet vs(std::initializer_list<Variable> vars) {
  VarSet out;
  for (Variable v : vars) out.insert(v);
  return out;
}

inline SharingSet sh(std::initializer_list<VarSet> groups) {
  SharingSet out;
  for (const VarSet& s : groups) out.insert(s);
  return out;
}

}  // namespace testutil
