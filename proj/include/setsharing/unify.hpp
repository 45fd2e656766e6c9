#pragma once

#include <vector>

#include "setsharing/substitution.hpp"
#include "setsharing/term.hpp"

namespace setsharing {

struct Equation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equation& a, const Equation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Processing order is the list order (front first).
using EquationSet = std::vector<Equation>;

/// A substitution read as the equation set {x = t | x -> t}.
EquationSet to_equations(const Substitution& sigma);

class UnifyResult {
 public:
  enum class Status { Solved, Clash, OccursCheck };

  static UnifyResult make_solved(Substitution solution) {
    UnifyResult r;
    r.status_ = Status::Solved;
    r.solution_ = std::move(solution);
    return r;
  }
  static UnifyResult make_clash() {
    UnifyResult r;
    r.status_ = Status::Clash;
    return r;
  }
  static UnifyResult make_occurs_check() {
    UnifyResult r;
    r.status_ = Status::OccursCheck;
    return r;
  }

  Status status() const { return status_; }
  bool solved() const { return status_ == Status::Solved; }
  const Substitution& solution() const;

 private:
  UnifyResult() = default;
  Status status_ = Status::Clash;
  Substitution solution_;
};

/// Transformation-based unification working through the equation list
/// front to back. A binding x -> t is recorded once and substituted into
/// the remaining equations only, never back into the accumulated
/// substitution, so solutions come out in rational solved form and need
/// not be idempotent. Herbrand mode fails with OccursCheck on x = t with
/// x in vars(t); rational-trees mode accepts such equations.
UnifyResult unify(const EquationSet& equations, EqualityMode mode);

/// Whether sigma, read as a set of equations, is satisfiable in the
/// selected theory. In rational-trees mode every substitution in
/// rational solved form is satisfiable; in Herbrand mode the equations
/// must unify under the occurs-check. Requires sigma in rational solved
/// form.
bool satisfiable(const Substitution& sigma, EqualityMode mode);

}  // namespace setsharing
