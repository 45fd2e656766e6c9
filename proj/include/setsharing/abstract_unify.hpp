#pragma once

#include "setsharing/sharing.hpp"
#include "setsharing/substitution.hpp"
#include "setsharing/unify.hpp"

namespace setsharing {

/// Abstract effect of the binding x -> r on a sharing set: with
/// A = rel({x}, sh) and B = rel(vars(r), sh),
///   amgu(sh, x -> r) = (sh \ (A u B)) u bin(star(A), star(B)).
SharingSet amgu(const SharingSet& sh, const Binding& b);

/// Lifting to lattice elements: extends the universe with the fresh
/// variables of the binding (each as a singleton group), then applies
/// amgu. Defined on pairs only; bottom and top never reach it.
SSElement amgu(const SSElement& e, const Binding& b);

/// Abstract unifier for a whole substitution: bottom and top are fixed,
/// an unsatisfiable substitution yields bottom, and otherwise the
/// bindings are folded through amgu one at a time, smallest left-hand
/// side first. The fold order does not affect the result. Requires nu
/// in rational solved form.
SSElement aunify(const SSElement& e, const Substitution& nu, EqualityMode mode);

}  // namespace setsharing
