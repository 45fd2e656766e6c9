#include "setsharing/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace setsharing {

std::string default_var_name(Variable v) {
  return "x" + std::to_string(v.id() + 1);
}

Term Term::make(std::string functor, std::vector<Term> args) {
  if (functor.empty()) {
    throw std::invalid_argument("functor name must be nonempty");
  }
  auto node = std::make_shared<Node>();
  node->functor = std::move(functor);
  node->args = std::move(args);
  return Term(std::move(node));
}

const void* Term::node_id() const {
  if (is_var()) return nullptr;
  return std::get<std::shared_ptr<const Node>>(repr_).get();
}

namespace {

void collect_vars_rec(const Term& t, VarSet& out,
                      std::unordered_set<const void*>& seen) {
  if (t.is_var()) {
    out.insert(t.as_var());
    return;
  }
  if (!seen.insert(t.node_id()).second) return;
  for (const Term& arg : t.args()) collect_vars_rec(arg, out, seen);
}

bool contains_rec(const Term& t, Variable v,
                  std::unordered_set<const void*>& seen) {
  if (t.is_var()) return t.as_var() == v;
  if (!seen.insert(t.node_id()).second) return false;
  for (const Term& arg : t.args()) {
    if (contains_rec(arg, v, seen)) return true;
  }
  return false;
}

}  // namespace

void Term::collect_vars(VarSet& out) const {
  std::unordered_set<const void*> seen;
  collect_vars_rec(*this, out, seen);
}

VarSet Term::vars() const {
  VarSet out;
  collect_vars(out);
  return out;
}

bool Term::contains(Variable v) const {
  std::unordered_set<const void*> seen;
  return contains_rec(*this, v, seen);
}

namespace {

struct NodePairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    std::size_t h = std::hash<const void*>{}(p.first);
    return h ^ (std::hash<const void*>{}(p.second) + 0x9e3779b9 + (h << 6));
  }
};

using ProvenEqual =
    std::unordered_set<std::pair<const void*, const void*>, NodePairHash>;

bool equal_rec(const Term& a, const Term& b, ProvenEqual& proven) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.as_var() == b.as_var();
  if (a.node_id() == b.node_id()) return true;
  auto key = std::make_pair(a.node_id(), b.node_id());
  if (proven.count(key)) return true;
  if (a.functor() != b.functor() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!equal_rec(a.args()[i], b.args()[i], proven)) return false;
  }
  proven.insert(key);
  return true;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  ProvenEqual proven;
  return equal_rec(a, b, proven);
}

Alphabet::Alphabet(std::vector<Functor> functors) : functors_(std::move(functors)) {
  bool has_constant = false;
  for (const auto& f : functors_) {
    if (f.arity == 0) has_constant = true;
  }
  auto distinct = functors_;
  std::sort(distinct.begin(), distinct.end(), [](const Functor& a, const Functor& b) {
    return std::tie(a.name, a.arity) < std::tie(b.name, b.arity);
  });
  distinct.erase(std::unique(distinct.begin(), distinct.end(),
                             [](const Functor& a, const Functor& b) {
                               return a.name == b.name && a.arity == b.arity;
                             }),
                 distinct.end());
  if (distinct.size() < 2 || !has_constant) {
    throw std::invalid_argument(
        "alphabet needs at least two distinct functors, one of them a constant");
  }
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VarSet set_intersect(const VarSet& a, const VarSet& b) {
  VarSet out;
  for (Variable v : a) {
    if (b.count(v)) out.insert(v);
  }
  return out;
}

VarSet set_diff(const VarSet& a, const VarSet& b) {
  VarSet out;
  for (Variable v : a) {
    if (!b.count(v)) out.insert(v);
  }
  return out;
}

bool intersects(const VarSet& a, const VarSet& b) {
  const VarSet& small = a.size() <= b.size() ? a : b;
  const VarSet& large = a.size() <= b.size() ? b : a;
  for (Variable v : small) {
    if (large.count(v)) return true;
  }
  return false;
}

bool is_subset(const VarSet& a, const VarSet& b) {
  for (Variable v : a) {
    if (!b.count(v)) return false;
  }
  return true;
}

}  // namespace setsharing
