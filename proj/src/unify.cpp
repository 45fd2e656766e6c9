#include "setsharing/unify.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

#include <boost/container/flat_set.hpp>

namespace setsharing {

namespace {

// Whether following variable-to-variable bindings from `from` ends in
// `target`. Finite because the accumulated substitution has no circular
// subset.
bool var_chain_reaches(const Substitution& mu, Variable from, Variable target) {
  Variable v = from;
  while (true) {
    const Term* r = mu.lookup(v);
    if (r == nullptr || !r->is_var()) return false;
    if (r->as_var() == target) return true;
    v = r->as_var();
  }
}

}  // namespace

EquationSet to_equations(const Substitution& sigma) {
  EquationSet out;
  out.reserve(sigma.size());
  for (const auto& [x, t] : sigma.entries()) {
    out.push_back(Equation{Term::var(x), t});
  }
  return out;
}

const Substitution& UnifyResult::solution() const {
  if (!solved()) {
    throw std::logic_error("no solution on a failed unification");
  }
  return solution_;
}

UnifyResult unify(const EquationSet& equations, EqualityMode mode) {
  std::deque<Equation> queue(equations.begin(), equations.end());
  Substitution mu;
  // Bound variables resurface when a binding whose image mentions them
  // is decomposed again; such equations defer to the recorded image
  // instead of binding twice. Every variable/variable and variable/node
  // pair met this way is expanded once: self-referential images denote
  // rational trees, and comparing them terminates only under this memo.
  boost::container::flat_set<std::pair<Variable, Variable>> merged_vars;
  boost::container::flat_set<std::pair<Variable, const void*>> merged_nodes;
  auto seen_pair = [&merged_vars](Variable a, Variable b) {
    if (b < a) std::swap(a, b);
    return !merged_vars.insert({a, b}).second;
  };
  auto seen_node = [&merged_nodes](Variable a, const Term& t) {
    return !merged_nodes.insert({a, t.node_id()}).second;
  };

  while (!queue.empty()) {
    Equation eq = std::move(queue.front());
    queue.pop_front();
    Term s = std::move(eq.lhs);
    Term t = std::move(eq.rhs);

    if (s.is_var() && t.is_var() && s.as_var() == t.as_var()) {
      continue;
    }
    if (s.is_compound() && t.is_compound()) {
      if (s.functor() != t.functor() || s.arity() != t.arity()) {
        return UnifyResult::make_clash();
      }
      for (std::size_t i = s.arity(); i > 0; --i) {
        queue.push_front(Equation{s.args()[i - 1], t.args()[i - 1]});
      }
      continue;
    }
    if (s.is_compound()) std::swap(s, t);

    Variable x = s.as_var();
    auto bind_and_eliminate = [&queue, &mu](Variable v, Term term) {
      Substitution step;
      step.bind(v, term);
      for (Equation& rest : queue) {
        rest.lhs = apply(rest.lhs, step);
        rest.rhs = apply(rest.rhs, step);
      }
      mu.bind(v, std::move(term));
    };

    if (const Term* x_image = mu.lookup(x)) {
      if (t.is_var()) {
        Variable y = t.as_var();
        if (!mu.binds(y)) {
          // Keep the result lazy: record y -> x unless the variable
          // chain from x comes back to y, which would close a cycle;
          // then fall back to the recorded image.
          if (!var_chain_reaches(mu, x, y)) {
            bind_and_eliminate(y, std::move(s));
            continue;
          }
        }
        if (seen_pair(x, y)) continue;
      } else if (seen_node(x, t)) {
        continue;
      }
      queue.push_front(Equation{*x_image, std::move(t)});
      continue;
    }
    if (t.is_var()) {
      Variable y = t.as_var();
      if (const Term* y_image = mu.lookup(y)) {
        // x -> y is the documented choice for variable pairs; only a
        // chain from y back to x forces the image route.
        if (var_chain_reaches(mu, y, x)) {
          if (seen_pair(x, y)) continue;
          queue.push_front(Equation{std::move(s), *y_image});
          continue;
        }
      }
    }
    if (mode == EqualityMode::Herbrand && t.contains(x)) {
      return UnifyResult::make_occurs_check();
    }
    bind_and_eliminate(x, std::move(t));
  }

  // A variable-to-variable binding is only recorded after checking that
  // the chain from its target does not lead back to its source, so no
  // circular subset can form; a violation here is a bug.
  if (!is_rsubst(mu)) {
    throw std::logic_error("unifier produced a substitution with a circular subset");
  }
  return UnifyResult::make_solved(std::move(mu));
}

bool satisfiable(const Substitution& sigma, EqualityMode mode) {
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument("satisfiable requires rational solved form");
  }
  if (mode == EqualityMode::RationalTrees) return true;
  return unify(to_equations(sigma), EqualityMode::Herbrand).solved();
}

}  // namespace setsharing
