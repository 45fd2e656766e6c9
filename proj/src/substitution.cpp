#include "setsharing/substitution.hpp"

#include <stdexcept>
#include <unordered_map>

namespace setsharing {

Binding::Binding(Variable lhs_, Term rhs_) : lhs(lhs_), rhs(std::move(rhs_)) {
  if (rhs.is_var() && rhs.as_var() == lhs) {
    throw std::invalid_argument("binding must not map a variable to itself");
  }
}

Substitution::Substitution(std::initializer_list<Binding> bindings) {
  for (const Binding& b : bindings) bind(b.lhs, b.rhs);
}

Substitution::Substitution(const std::vector<Binding>& bindings) {
  for (const Binding& b : bindings) bind(b.lhs, b.rhs);
}

void Substitution::bind(Variable x, Term t) {
  if (t.is_var() && t.as_var() == x) {
    throw std::invalid_argument("cannot bind a variable to itself");
  }
  auto [it, inserted] = map_.emplace(x, std::move(t));
  if (!inserted) {
    throw std::invalid_argument("variable is already bound");
  }
}

void Substitution::erase(Variable x) { map_.erase(x); }

const Term* Substitution::lookup(Variable x) const {
  auto it = map_.find(x);
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<Binding> Substitution::bindings() const {
  std::vector<Binding> out;
  out.reserve(map_.size());
  for (const auto& [x, t] : map_) out.emplace_back(x, t);
  return out;
}

VarSet Substitution::domain() const {
  VarSet out;
  for (const auto& [x, t] : map_) out.insert(x);
  return out;
}

VarSet Substitution::variables() const {
  VarSet out;
  for (const auto& [x, t] : map_) {
    out.insert(x);
    t.collect_vars(out);
  }
  return out;
}

VarSet Substitution::parameters() const {
  return set_diff(variables(), domain());
}

namespace {

// Shared subterms are transformed once per call; the memo keeps the
// output as compact as the input dag.
using NodeMemo = std::unordered_map<const void*, Term>;

bool same_node(const Term& a, const Term& b) {
  if (a.is_var() && b.is_var()) return a.as_var() == b.as_var();
  return !a.is_var() && !b.is_var() && a.node_id() == b.node_id();
}

template <typename MapVar>
Term transform(const Term& t, const MapVar& map_var, NodeMemo& memo) {
  if (t.is_var()) return map_var(t.as_var());
  if (t.arity() == 0) return t;
  auto it = memo.find(t.node_id());
  if (it != memo.end()) return it->second;
  bool changed = false;
  std::vector<Term> mapped;
  mapped.reserve(t.arity());
  for (const Term& arg : t.args()) {
    mapped.push_back(transform(arg, map_var, memo));
    if (!same_node(mapped.back(), arg)) changed = true;
  }
  Term out = changed ? Term::make(t.functor(), std::move(mapped)) : t;
  memo.emplace(t.node_id(), out);
  return out;
}

}  // namespace

Term apply(const Term& t, const Substitution& sigma) {
  NodeMemo memo;
  return transform(
      t,
      [&sigma](Variable v) {
        const Term* bound = sigma.lookup(v);
        return bound ? *bound : Term::var(v);
      },
      memo);
}

Term apply(Variable v, const Substitution& sigma) {
  const Term* bound = sigma.lookup(v);
  return bound ? *bound : Term::var(v);
}

Term apply_n(const Term& t, const Substitution& sigma, unsigned n) {
  Term out = t;
  for (unsigned i = 0; i < n; ++i) out = apply(out, sigma);
  return out;
}

Term replace(const Term& t, Variable x, const Term& s) {
  NodeMemo memo;
  return transform(
      t, [&x, &s](Variable v) { return v == x ? s : Term::var(v); }, memo);
}

Term swap_variables(const Term& t, Variable v, Variable w) {
  NodeMemo memo;
  return transform(
      t,
      [v, w](Variable u) {
        if (u == v) return Term::var(w);
        if (u == w) return Term::var(v);
        return Term::var(u);
      },
      memo);
}

Substitution compose(const Substitution& tau, const Substitution& sigma) {
  Substitution out;
  for (const auto& [x, t] : sigma.entries()) {
    Term mapped = apply(t, tau);
    if (!(mapped.is_var() && mapped.as_var() == x)) {
      out.bind(x, std::move(mapped));
    }
  }
  for (const auto& [x, t] : tau.entries()) {
    if (!sigma.binds(x)) out.bind(x, t);
  }
  return out;
}

namespace {

// Chains of variable-to-variable bindings within the domain; a circular
// subset is exactly a cycle of such bindings.
bool has_variable_cycle(const Substitution& sigma) {
  enum class Mark { White, Grey, Black };
  boost::container::flat_map<Variable, Mark> marks;
  for (const auto& [x, t] : sigma.entries()) marks.emplace(x, Mark::White);

  auto next = [&sigma](Variable x) -> const Term* { return sigma.lookup(x); };

  for (const auto& [start, t0] : sigma.entries()) {
    if (marks[start] != Mark::White) continue;
    Variable cur = start;
    std::vector<Variable> path;
    while (true) {
      marks[cur] = Mark::Grey;
      path.push_back(cur);
      const Term* t = next(cur);
      if (t == nullptr || !t->is_var() || !sigma.binds(t->as_var())) break;
      Variable succ = t->as_var();
      if (marks[succ] == Mark::Grey) return true;
      if (marks[succ] == Mark::Black) break;
      cur = succ;
    }
    for (Variable v : path) marks[v] = Mark::Black;
  }
  return false;
}

bool var_idempotent_core(const Substitution& sigma, const VarSet& dom) {
  for (const auto& [x, r] : sigma.entries()) {
    VarSet once = set_diff(r.vars(), dom);
    VarSet twice = set_diff(apply(r, sigma).vars(), dom);
    if (once != twice) return false;
  }
  return true;
}

}  // namespace

bool is_circular(const Substitution& sigma) {
  if (sigma.size() < 2) return false;
  for (const auto& [x, t] : sigma.entries()) {
    if (!t.is_var()) return false;
  }
  // Single functional graph; circular means one cycle covering every binding.
  Variable start = sigma.entries().begin()->first;
  Variable cur = start;
  std::size_t steps = 0;
  while (steps < sigma.size()) {
    const Term* t = sigma.lookup(cur);
    if (t == nullptr) return false;
    cur = t->as_var();
    ++steps;
  }
  return cur == start;
}

bool is_rsubst(const Substitution& sigma) { return !has_variable_cycle(sigma); }

bool is_idempotent(const Substitution& sigma) {
  VarSet support = sigma.variables();
  for (Variable x : support) {
    Term once = apply(x, sigma);
    if (apply(once, sigma) != once) return false;
  }
  return true;
}

bool is_ordered(const Substitution& sigma) {
  for (const auto& [v, t] : sigma.entries()) {
    if (t.is_var() && !sigma.binds(t.as_var()) && v < t.as_var()) return false;
  }
  return true;
}

Classification classify(const Substitution& sigma) {
  Classification c;
  c.is_circular = is_circular(sigma);
  c.is_rsubst = is_rsubst(sigma);
  c.is_idempotent = is_idempotent(sigma);
  c.is_var_idempotent = c.is_rsubst && var_idempotent_core(sigma, sigma.domain());
  c.is_ordered = is_ordered(sigma);
  return c;
}

}  // namespace setsharing
