#include "setsharing/vsubst.hpp"

#include <optional>
#include <stdexcept>

namespace setsharing {

namespace {

void require_rsubst(const Substitution& sigma, const char* who) {
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument(std::string(who) + " requires rational solved form");
  }
}

}  // namespace

bool is_var_idempotent(const Substitution& sigma) {
  require_rsubst(sigma, "is_var_idempotent");
  VarSet dom = sigma.domain();
  for (const auto& [x, r] : sigma.entries()) {
    if (set_diff(apply(r, sigma).vars(), dom) != set_diff(r.vars(), dom)) {
      return false;
    }
  }
  return true;
}

Substitution s_step(const Substitution& sigma, const Binding& from,
                    const Binding& into) {
  require_rsubst(sigma, "s_step");
  const Term* t = sigma.lookup(from.lhs);
  const Term* s = sigma.lookup(into.lhs);
  if (t == nullptr || *t != from.rhs || s == nullptr || *s != into.rhs) {
    throw std::invalid_argument("s_step bindings must belong to the substitution");
  }
  if (from.lhs == into.lhs) {
    throw std::invalid_argument("s_step needs two distinct bindings");
  }
  Substitution out = sigma;
  out.erase(into.lhs);
  out.bind(into.lhs, replace(into.rhs, from.lhs, from.rhs));
  return out;
}

Substitution to_vsubst(const Substitution& sigma) {
  require_rsubst(sigma, "to_vsubst");
  std::vector<Binding> bs = sigma.bindings();  // ascending by lhs
  const std::size_t n = bs.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      bs[i].rhs = replace(bs[i].rhs, bs[j].lhs, bs[j].rhs);
    }
  }
  return Substitution(bs);
}

Substitution exchange_variables(const Substitution& sigma, Variable v,
                                Variable w) {
  if (v == w) return sigma;
  Substitution out;
  for (const auto& [x, t] : sigma.entries()) {
    Variable lhs = x == v ? w : (x == w ? v : x);
    out.bind(lhs, swap_variables(t, v, w));
  }
  return out;
}

Substitution order_vsubst(const Substitution& sigma) {
  if (!is_var_idempotent(sigma)) {
    throw std::invalid_argument("order_vsubst requires a variable-idempotent input");
  }
  Substitution cur = sigma;
  auto count_unordered = [](const Substitution& s) {
    std::size_t n = 0;
    for (const auto& [v, t] : s.entries()) {
      if (t.is_var() && !s.binds(t.as_var()) && v < t.as_var()) ++n;
    }
    return n;
  };
  std::size_t remaining = count_unordered(cur);
  while (remaining > 0) {
    std::optional<Binding> pick;
    for (const auto& [v, t] : cur.entries()) {
      if (t.is_var() && !cur.binds(t.as_var()) && v < t.as_var()) {
        pick = Binding(v, t);  // entries are ascending, first hit is smallest lhs
        break;
      }
    }
    cur = exchange_variables(cur, pick->lhs, pick->rhs.as_var());
    std::size_t now = count_unordered(cur);
    if (now >= remaining) {
      throw std::logic_error("variable exchange failed to reduce unordered bindings");
    }
    remaining = now;
  }
  return cur;
}

}  // namespace setsharing
