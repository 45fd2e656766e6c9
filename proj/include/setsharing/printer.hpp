#pragma once

#include <functional>
#include <string>

#include "setsharing/sharing.hpp"
#include "setsharing/substitution.hpp"
#include "setsharing/unify.hpp"

namespace setsharing {

using NameFn = std::function<std::string(Variable)>;

/// Canonical text forms. Defaults name variables x1, x2, ...
std::string to_text(const Term& t, const NameFn& name = default_var_name);
std::string to_text(const Binding& b, const NameFn& name = default_var_name);
/// "{X -> t, Y -> s}" with bindings in variable order.
std::string to_text(const Substitution& sigma, const NameFn& name = default_var_name);
std::string to_text(const Equation& e, const NameFn& name = default_var_name);
/// "{X1,X2}" with members in variable order.
std::string group_text(const VarSet& group, const NameFn& name = default_var_name);
/// "{{X1,X2},{X3}}", "bottom" or "top".
std::string to_text(const SSElement& e, const NameFn& name = default_var_name);

/// One binding per line, the problem-file form of a substitution.
std::string to_problem_text(const Substitution& sigma,
                            const NameFn& name = default_var_name);

}  // namespace setsharing
