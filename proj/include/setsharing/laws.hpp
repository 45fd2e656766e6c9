#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "setsharing/abstract_unify.hpp"
#include "setsharing/abstraction.hpp"
#include "setsharing/sharing.hpp"
#include "setsharing/substitution.hpp"
#include "setsharing/unify.hpp"

namespace setsharing::laws {

struct GenOptions {
  unsigned max_vars = 6;
  unsigned max_bindings = 5;
  unsigned max_depth = 3;
};

enum class GenMode { Unrestricted, Idempotent, VariableIdempotent };

/// Seeded generator over the fixed alphabet {a/0, f/1, g/2} and the
/// variable pool x1..x_max_vars. Substitutions always come out in
/// rational solved form; circular candidates are rejected and retried.
class Gen {
 public:
  explicit Gen(std::uint64_t seed, GenOptions options = {});

  const GenOptions& options() const { return options_; }
  std::mt19937_64& rng() { return rng_; }

  bool coin(double p);
  unsigned below(unsigned n);  // uniform in [0, n)

  Variable variable();
  std::vector<Variable> pool() const;
  VarSet var_subset(const std::vector<Variable>& from, double density);

  Term term(unsigned max_depth);
  Term term_from(const std::vector<Variable>& pool, unsigned max_depth);

  Substitution substitution(GenMode mode);
  Substitution substitution_from(const std::vector<Variable>& pool, GenMode mode);

  /// Random equation set; leans on solvable instances by wrapping a
  /// generated substitution half of the time.
  EquationSet equations(unsigned max_items);

  /// Every nonempty subset of the universe kept with the given
  /// probability.
  SharingSet sharing_set(const VarSet& universe, double density);

 private:
  std::mt19937_64 rng_;
  GenOptions options_;
};

/// Reference star closure by enumeration of all nonempty subfamilies.
/// Guarded to |sh| <= 12.
SharingSet oracle_star(const SharingSet& sh);

/// Reference occurrence set: the literal level-by-level iteration with
/// no early exit, run to the hard cap. Guarded to |vars(sigma)| <= 6.
VarSet oracle_occ(const Substitution& sigma, Variable v);

struct SoundnessOutcome {
  bool applicable = false;  // the concrete equations unified
  bool holds = false;
  std::string detail;
};

/// Runs the whole concrete-vs-abstract pipeline: unify sigma u nu, take
/// the abstraction of the solution, and compare with folding nu into
/// the abstraction of sigma (plus optional extra sharing groups in the
/// start element). Requires vars(sigma) within the universe.
SoundnessOutcome oracle_soundness(const Substitution& sigma, const Substitution& nu,
                                  const VarSet& universe, EqualityMode mode,
                                  const SharingSet& extra_sharing = {});

/// Greedily drops bindings while the case keeps failing and stays
/// valid; subsets of a substitution in rational solved form are again
/// in rational solved form, so shrinking never leaves the class.
Substitution shrink_substitution(
    Substitution sigma, const std::function<bool(const Substitution&)>& still_fails,
    const std::function<bool(const Substitution&)>& still_valid);

struct LawResult {
  std::string name;
  int criterion = 0;  // acceptance criterion the law belongs to; 0 = extra
  long cases = 0;
  long failures = 0;
  std::string first_counterexample;
  double seconds = 0.0;
  bool passed() const { return failures == 0; }
};

struct SuiteConfig {
  std::uint64_t seed = 20011217;
  double scale = 1.0;  // multiplies randomized case counts; exhaustive laws ignore it
  std::function<void(const LawResult&)> on_result;  // progress hook, may be empty
};

std::vector<std::string> law_names();
std::vector<LawResult> run_laws(const SuiteConfig& config = {});
/// Only the laws belonging to one acceptance criterion (2, 3 or 4).
std::vector<LawResult> run_laws_for_criterion(int criterion,
                                              const SuiteConfig& config = {});

}  // namespace setsharing::laws
