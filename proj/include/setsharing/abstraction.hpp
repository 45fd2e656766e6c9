#pragma once

#include <vector>

#include "setsharing/sharing.hpp"
#include "setsharing/substitution.hpp"

namespace setsharing {

/// Sharing group of v: the variables y whose image under sigma contains
/// v. Requires an idempotent substitution; outside that class the value
/// is not a faithful sharing description.
VarSet sg(const Substitution& sigma, Variable v);
/// Same formula with no precondition; only meaningful diagnostics.
VarSet sg_unchecked(const Substitution& sigma, Variable v);

/// Classical abstraction of an idempotent substitution over the
/// universe U: the nonempty sets sg(sigma, v) n U.
SSElement alpha_classical(const Substitution& sigma, const VarSet& universe);
SSElement alpha_classical_unchecked(const Substitution& sigma,
                                    const VarSet& universe);

/// Occurrence functions: occ_0(sigma, v) = {v} \ dom(sigma); for n > 0,
/// occ_n collects the variables whose image meets occ_{n-1}. Requires
/// rational solved form.
VarSet occ_n(const Substitution& sigma, Variable v, unsigned n);

/// The occurrence operator: the limit of the occ_n chain, reached once
/// two successive iterations agree. The chain is monotone and confined
/// to {v} u vars(sigma), so it stabilizes within |vars(sigma)| + 1
/// steps; the implementation stops one step later and treats a missing
/// fixpoint as an internal error.
VarSet occ(const Substitution& sigma, Variable v);

/// Abstraction of a substitution in rational solved form over U: the
/// nonempty sets occ(sigma, v) n U. Coincides with alpha_classical on
/// idempotent substitutions.
SSElement alpha(const Substitution& sigma, const VarSet& universe);

/// Least upper bound of the pointwise abstractions; bottom for the
/// empty family.
SSElement alpha_set(const std::vector<Substitution>& sigmas,
                    const VarSet& universe);

}  // namespace setsharing
