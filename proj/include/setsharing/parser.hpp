#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/flat_map.hpp>

#include "setsharing/substitution.hpp"
#include "setsharing/term.hpp"
#include "setsharing/unify.hpp"

namespace setsharing {

struct SyntaxError : std::runtime_error {
  SyntaxError(int line_, int column_, const std::string& message);
  int line;
  int column;
};

/// Maps surface names to variables in order of first use; the order of
/// interning defines the variable order (first name is smallest).
class NameTable {
 public:
  Variable intern(const std::string& name);
  std::optional<Variable> find(const std::string& name) const;
  const std::string& name(Variable v) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  boost::container::flat_map<std::string, Variable> ids_;
};

struct ProblemItem {
  bool is_binding = false;  // X -> t rather than s = t
  Term lhs;
  Term rhs;
  int line = 0;
};

/// A parsed problem: an optional mode header, an optional universe
/// declaration and a body of equations and bindings. Variables are
/// identifiers starting with an uppercase letter, plus anything listed
/// in the universe.
struct ProblemFile {
  std::optional<EqualityMode> mode;
  bool universe_declared = false;
  std::size_t universe_size = 0;  // leading entries of the name table
  NameTable names;
  std::vector<ProblemItem> items;

  /// The declared universe, or every variable of the file when none was
  /// declared.
  VarSet universe() const;

  EquationSet equations() const;
  /// All items read as bindings; an equation qualifies when its left
  /// side is a variable. Throws SyntaxError otherwise, and on repeated
  /// or self-referential left-hand sides.
  Substitution substitution() const;
};

/// Parses the textual format:
///   term     := VAR | functor | functor '(' term (',' term)* ')'
///   equation := term '=' term
///   binding  := VAR '->' term
/// one item per line, '%' starting a comment, with optional leading
/// header lines "mode: herbrand|rational" and "universe: X1, X2, ...".
/// A nonempty universe_override replaces any declared universe.
ProblemFile parse_problem(std::string_view text,
                          const std::vector<std::string>& universe_override = {});

}  // namespace setsharing
