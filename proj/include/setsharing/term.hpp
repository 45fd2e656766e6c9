#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/flat_set.hpp>

namespace setsharing {

/// A variable in the denumerable universe. The total order on variables
/// is the numeric order on ids.
class Variable {
 public:
  explicit constexpr Variable(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t id() const { return id_; }
  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  std::uint32_t id_;
};

using VarSet = boost::container::flat_set<Variable>;

/// Default rendering: id i prints as "x{i+1}".
std::string default_var_name(Variable v);

/// A finite first-order term: either a variable or a compound
/// f(t1,...,tn). A constant is a compound with zero arguments.
/// Functors are identified by name *and* arity, so f/1 and f/2 are
/// distinct. Terms are immutable and share structure freely.
class Term {
 public:
  static Term var(Variable v) { return Term(v); }
  static Term make(std::string functor, std::vector<Term> args = {});

  bool is_var() const { return std::holds_alternative<Variable>(repr_); }
  bool is_compound() const { return !is_var(); }

  Variable as_var() const { return std::get<Variable>(repr_); }
  const std::string& functor() const { return node().functor; }
  const std::vector<Term>& args() const { return node().args; }
  std::size_t arity() const { return node().args.size(); }

  /// Stable identity of the compound node, null for variables. Repeated
  /// substitution builds heavily shared structure, so every term walk
  /// must be memoized on this identity rather than recurse per path.
  const void* node_id() const;

  VarSet vars() const;
  void collect_vars(VarSet& out) const;
  bool contains(Variable v) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    std::string functor;
    std::vector<Term> args;
  };

  explicit Term(Variable v) : repr_(v) {}
  explicit Term(std::shared_ptr<const Node> n) : repr_(std::move(n)) {}
  const Node& node() const { return *std::get<std::shared_ptr<const Node>>(repr_); }

  std::variant<Variable, std::shared_ptr<const Node>> repr_;
};

/// Selects the equality theory the unifier and the satisfiability test
/// work in: Herbrand adds the occurs-check behaviour, rational trees
/// does not.
enum class EqualityMode { Herbrand, RationalTrees };

/// A functor signature set. Construction checks that there are at least
/// two distinct functors, one of which is a constant.
class Alphabet {
 public:
  struct Functor {
    std::string name;
    std::size_t arity;
  };

  explicit Alphabet(std::vector<Functor> functors);
  const std::vector<Functor>& functors() const { return functors_; }

 private:
  std::vector<Functor> functors_;
};

// Small set helpers used throughout; flat_set keeps everything sorted.
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_intersect(const VarSet& a, const VarSet& b);
VarSet set_diff(const VarSet& a, const VarSet& b);
bool intersects(const VarSet& a, const VarSet& b);
bool is_subset(const VarSet& a, const VarSet& b);

}  // namespace setsharing
