#include "setsharing/printer.hpp"

namespace setsharing {

std::string to_text(const Term& t, const NameFn& name) {
  if (t.is_var()) return name(t.as_var());
  std::string out = t.functor();
  if (t.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    out += to_text(t.args()[i], name);
  }
  out += ')';
  return out;
}

std::string to_text(const Binding& b, const NameFn& name) {
  return name(b.lhs) + " -> " + to_text(b.rhs, name);
}

std::string to_text(const Substitution& sigma, const NameFn& name) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, t] : sigma.entries()) {
    if (!first) out += ", ";
    first = false;
    out += name(x) + " -> " + to_text(t, name);
  }
  out += '}';
  return out;
}

std::string to_text(const Equation& e, const NameFn& name) {
  return to_text(e.lhs, name) + " = " + to_text(e.rhs, name);
}

std::string group_text(const VarSet& group, const NameFn& name) {
  std::string out = "{";
  bool first = true;
  for (Variable v : group) {
    if (!first) out += ',';
    first = false;
    out += name(v);
  }
  out += '}';
  return out;
}

std::string to_text(const SSElement& e, const NameFn& name) {
  if (e.is_bottom()) return "bottom";
  if (e.is_top()) return "top";
  std::string out = "{";
  bool first = true;
  for (const SharingGroup& s : e.sharing()) {
    if (!first) out += ',';
    first = false;
    out += group_text(s, name);
  }
  out += '}';
  return out;
}

std::string to_problem_text(const Substitution& sigma, const NameFn& name) {
  std::string out;
  for (const auto& [x, t] : sigma.entries()) {
    out += name(x) + " -> " + to_text(t, name) + "\n";
  }
  return out;
}

}  // namespace setsharing
