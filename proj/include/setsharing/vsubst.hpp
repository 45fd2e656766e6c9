#pragma once

#include "setsharing/substitution.hpp"

namespace setsharing {

/// Variable-idempotence: repeated application never changes the set of
/// free (non-domain) variables of a term. Checked binding-wise:
/// vars(r sigma) \ dom = vars(r) \ dom for every binding x -> r.
/// Requires sigma in rational solved form.
bool is_var_idempotent(const Substitution& sigma);

/// One rewriting step: with (x -> t) and (y -> s) both in sigma and
/// x != y, replaces the binding y -> s by y -> s[x/t]. Preserves the
/// domain, the variable set and rational solved form.
Substitution s_step(const Substitution& sigma, const Binding& from,
                    const Binding& into);

/// Rewrites sigma to an equivalent substitution whose every subset is
/// variable-idempotent. Runs one pass per domain variable in ascending
/// order, substituting that binding's current right-hand side into all
/// other bindings. Requires sigma in rational solved form.
Substitution to_vsubst(const Substitution& sigma);

/// The renamed substitution {x rho -> t rho | x -> t in sigma} for the
/// swap rho = {v -> w, w -> v}.
Substitution exchange_variables(const Substitution& sigma, Variable v,
                                Variable w);

/// Makes a variable-idempotent substitution ordered by repeatedly
/// swapping the two sides of an unordered binding v -> w through the
/// whole substitution. Picks the unordered binding with the smallest
/// left-hand side each round. Requires is_var_idempotent(sigma).
Substitution order_vsubst(const Substitution& sigma);

}  // namespace setsharing
