#pragma once

#include <initializer_list>
#include <vector>

#include <boost/container/flat_map.hpp>

#include "setsharing/term.hpp"

namespace setsharing {

/// One binding x -> s with s a term other than x itself.
struct Binding {
  Binding(Variable lhs_, Term rhs_);

  Variable lhs;
  Term rhs;

  friend bool operator==(const Binding& a, const Binding& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// A substitution: a finite map from variables to terms, the identity
/// everywhere else. Bindings are kept sorted by variable order, so two
/// substitutions compare equal exactly when they have the same set of
/// bindings.
class Substitution {
 public:
  using Map = boost::container::flat_map<Variable, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<Binding> bindings);
  explicit Substitution(const std::vector<Binding>& bindings);

  /// Inserts x -> t. Throws if x is already bound or t is the variable x.
  void bind(Variable x, Term t);
  void erase(Variable x);

  bool binds(Variable x) const { return map_.count(x) != 0; }
  /// The bound term, or null when x maps to itself.
  const Term* lookup(Variable x) const;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const Map& entries() const { return map_; }
  std::vector<Binding> bindings() const;

  VarSet domain() const;
  VarSet variables() const;
  VarSet parameters() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.map_ == b.map_;
  }
  friend bool operator!=(const Substitution& a, const Substitution& b) {
    return !(a == b);
  }

 private:
  Map map_;
};

/// Term application t(sigma): constants are fixed, variables looked up,
/// compounds mapped argument-wise.
Term apply(const Term& t, const Substitution& sigma);
Term apply(Variable v, const Substitution& sigma);
/// sigma^n applied to t; n = 0 is the identity.
Term apply_n(const Term& t, const Substitution& sigma, unsigned n);
/// Textual replacement t[x/s].
Term replace(const Term& t, Variable x, const Term& s);
/// Simultaneous exchange of two variables throughout the term.
Term swap_variables(const Term& t, Variable v, Variable w);

/// Composition tau . sigma (sigma applied first), as the set
///   {x -> x sigma tau | x in dom(sigma), x != x sigma tau}
///   u {x -> x tau | x in dom(tau) \ dom(sigma)}.
Substitution compose(const Substitution& tau, const Substitution& sigma);

struct Classification {
  bool is_circular = false;
  bool is_rsubst = false;
  bool is_idempotent = false;
  // Same criterion the variable-idempotence module checks; meaningful
  // only when is_rsubst holds (false otherwise).
  bool is_var_idempotent = false;
  bool is_ordered = false;
};

/// True when the substitution as a whole is a cycle
/// {x1 -> x2, ..., xn -> x1} of distinct variables, n > 1.
bool is_circular(const Substitution& sigma);
/// Rational solved form: no subset of the bindings is circular.
bool is_rsubst(const Substitution& sigma);
bool is_idempotent(const Substitution& sigma);
/// Every binding v -> w with w a parameter variable has w < v.
bool is_ordered(const Substitution& sigma);

Classification classify(const Substitution& sigma);

}  // namespace setsharing
