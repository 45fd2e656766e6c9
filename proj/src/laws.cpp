#include "setsharing/laws.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "setsharing/printer.hpp"
#include "setsharing/vsubst.hpp"

namespace setsharing::laws {

// ---------------------------------------------------------------------------
// Generator

Gen::Gen(std::uint64_t seed, GenOptions options) : rng_(seed), options_(options) {
  if (options_.max_vars < 1 || options_.max_vars > 6 || options_.max_depth > 3) {
    throw std::invalid_argument("generator limits: 1..6 variables, depth <= 3");
  }
  // The fixed generation alphabet; construction validates it.
  Alphabet({{"a", 0}, {"f", 1}, {"g", 2}});
}

bool Gen::coin(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
}

unsigned Gen::below(unsigned n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_);
}

Variable Gen::variable() { return Variable(below(options_.max_vars)); }

std::vector<Variable> Gen::pool() const {
  std::vector<Variable> out;
  for (unsigned i = 0; i < options_.max_vars; ++i) out.emplace_back(i);
  return out;
}

VarSet Gen::var_subset(const std::vector<Variable>& from, double density) {
  VarSet out;
  for (Variable v : from) {
    if (coin(density)) out.insert(v);
  }
  return out;
}

Term Gen::term_from(const std::vector<Variable>& pool, unsigned max_depth) {
  if (max_depth <= 1 || pool.empty()) {
    if (!pool.empty() && coin(0.6)) return Term::var(pool[below(pool.size())]);
    return Term::make("a");
  }
  switch (below(10)) {
    case 0:
    case 1:
    case 2:
    case 3:
      return Term::var(pool[below(pool.size())]);
    case 4:
    case 5:
      return Term::make("a");
    case 6:
    case 7:
      return Term::make("f", {term_from(pool, max_depth - 1)});
    default:
      return Term::make("g", {term_from(pool, max_depth - 1),
                              term_from(pool, max_depth - 1)});
  }
}

Term Gen::term(unsigned max_depth) { return term_from(pool(), max_depth); }

Substitution Gen::substitution_from(const std::vector<Variable>& pool,
                                    GenMode mode) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    unsigned limit = std::min<unsigned>(options_.max_bindings,
                                        static_cast<unsigned>(pool.size()));
    unsigned n = below(limit + 1);
    std::vector<Variable> lhs = pool;
    std::shuffle(lhs.begin(), lhs.end(), rng_);
    lhs.erase(lhs.begin() + n, lhs.end());

    Substitution sigma;
    for (Variable x : lhs) {
      Term rhs = term_from(pool, 1 + below(options_.max_depth));
      if (rhs.is_var() && rhs.as_var() == x) rhs = Term::make("a");
      sigma.bind(x, std::move(rhs));
    }
    if (!is_rsubst(sigma)) continue;
    switch (mode) {
      case GenMode::Unrestricted:
        return sigma;
      case GenMode::Idempotent:
        if (is_idempotent(sigma)) return sigma;
        break;
      case GenMode::VariableIdempotent:
        return to_vsubst(sigma);
    }
  }
  throw std::logic_error("substitution generator starved");
}

Substitution Gen::substitution(GenMode mode) {
  return substitution_from(pool(), mode);
}

EquationSet Gen::equations(unsigned max_items) {
  EquationSet out;
  unsigned want = 1 + below(max_items);
  if (coin(0.5)) {
    Substitution sigma = substitution(GenMode::Unrestricted);
    for (const auto& [x, t] : sigma.entries()) {
      out.push_back(Equation{Term::var(x), t});
    }
    std::shuffle(out.begin(), out.end(), rng_);
  }
  while (out.size() < want) {
    out.push_back(Equation{term(options_.max_depth), term(options_.max_depth)});
  }
  return out;
}

SharingSet Gen::sharing_set(const VarSet& universe, double density) {
  std::vector<Variable> vars(universe.begin(), universe.end());
  SharingSet out;
  if (vars.size() > 16) throw std::invalid_argument("sharing_set universe too large");
  for (std::uint32_t mask = 1; mask < (1u << vars.size()); ++mask) {
    if (!coin(density)) continue;
    SharingGroup group;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (1u << i)) group.insert(vars[i]);
    }
    out.insert(std::move(group));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

SharingSet oracle_star(const SharingSet& sh) {
  if (sh.size() > 12) {
    throw std::invalid_argument("oracle_star handles at most 12 groups");
  }
  std::vector<SharingGroup> groups(sh.begin(), sh.end());
  SharingSet out;
  for (std::uint32_t mask = 1; mask < (1u << groups.size()); ++mask) {
    SharingGroup u;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (mask & (1u << i)) u = set_union(u, groups[i]);
    }
    out.insert(std::move(u));
  }
  return out;
}

VarSet oracle_occ(const Substitution& sigma, Variable v) {
  if (sigma.variables().size() > 6) {
    throw std::invalid_argument("oracle_occ handles at most 6 variables");
  }
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument("oracle_occ requires rational solved form");
  }
  VarSet candidates = sigma.variables();
  candidates.insert(v);

  VarSet level;
  if (!sigma.binds(v)) level.insert(v);
  const std::size_t cap = sigma.variables().size() + 2;
  for (std::size_t n = 0; n < cap; ++n) {
    VarSet next;
    for (Variable y : candidates) {
      if (intersects(apply(y, sigma).vars(), level)) next.insert(y);
    }
    level = std::move(next);
  }
  return level;
}

SoundnessOutcome oracle_soundness(const Substitution& sigma, const Substitution& nu,
                                  const VarSet& universe, EqualityMode mode,
                                  const SharingSet& extra_sharing) {
  VarSet all = set_union(universe, set_union(sigma.variables(), nu.variables()));
  if (all.size() > 6) {
    throw std::invalid_argument("oracle_soundness handles at most 6 variables");
  }
  EquationSet equations = to_equations(sigma);
  EquationSet more = to_equations(nu);
  equations.insert(equations.end(), more.begin(), more.end());

  UnifyResult solved = unify(equations, mode);
  if (!solved.solved()) {
    return SoundnessOutcome{false, true, "equations do not unify"};
  }

  SharingSet start = alpha(sigma, universe).sharing();
  for (const SharingGroup& s : extra_sharing) start.insert(s);

  SSElement folded = aunify(SSElement::pair(start, universe), nu, mode);
  VarSet extended = set_union(universe, nu.variables());
  SSElement truth = alpha(solved.solution(), extended);

  SoundnessOutcome out;
  out.applicable = true;
  out.holds = leq(truth, folded);
  if (!out.holds) {
    out.detail = "sigma=" + to_text(sigma) + " nu=" + to_text(nu) +
                 " U=" + group_text(universe) + " mu=" + to_text(solved.solution()) +
                 " alpha(mu)=" + to_text(truth) + " aunify=" + to_text(folded);
  }
  return out;
}

Substitution shrink_substitution(
    Substitution sigma, const std::function<bool(const Substitution&)>& still_fails,
    const std::function<bool(const Substitution&)>& still_valid) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Binding& b : sigma.bindings()) {
      Substitution candidate = sigma;
      candidate.erase(b.lhs);
      if (still_valid(candidate) && still_fails(candidate)) {
        sigma = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Law table

namespace {

struct Ctx {
  explicit Ctx(std::uint64_t seed, long target_) : gen(seed), target(target_) {}

  Gen gen;
  long target;
  LawResult* res = nullptr;
  long attempts = 0;

  bool done() {
    if (res->cases >= target) return true;
    if (++attempts > 200 * target + 10000) {
      throw std::logic_error("law generator starved: " + res->name);
    }
    return false;
  }
  void pass() { ++res->cases; }
  void fail(std::string counterexample) {
    ++res->cases;
    ++res->failures;
    if (res->first_counterexample.empty()) {
      res->first_counterexample = std::move(counterexample);
    }
  }
  void check(bool ok, const std::function<std::string()>& render) {
    if (ok) {
      pass();
    } else {
      fail(render());
    }
  }
};

using LawFn = void (*)(Ctx&);

struct LawDef {
  const char* name;
  int criterion;
  long base_cases;  // 0: exhaustive, the law decides how many cases it runs
  LawFn fn;
};

std::string sharing_text(const SharingSet& sh) {
  std::string out = "{";
  bool first = true;
  for (const SharingGroup& s : sh) {
    if (!first) out += ',';
    first = false;
    out += group_text(s);
  }
  return out + "}";
}

bool sharing_subset(const SharingSet& a, const SharingSet& b) {
  for (const SharingGroup& s : a) {
    if (!b.count(s)) return false;
  }
  return true;
}

VarSet equation_vars(const EquationSet& equations) {
  VarSet out;
  for (const Equation& e : equations) {
    e.lhs.collect_vars(out);
    e.rhs.collect_vars(out);
  }
  return out;
}

std::string equations_text(const EquationSet& equations) {
  std::string out = "[";
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (i) out += ", ";
    out += to_text(equations[i]);
  }
  return out + "]";
}

// --- exhaustive enumeration over a small universe --------------------------

std::vector<Variable> small_pool(unsigned n) {
  std::vector<Variable> out;
  for (unsigned i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

std::vector<SharingGroup> all_groups(const std::vector<Variable>& vars) {
  std::vector<SharingGroup> out;
  for (std::uint32_t mask = 1; mask < (1u << vars.size()); ++mask) {
    SharingGroup g;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (1u << i)) g.insert(vars[i]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<SharingSet> all_sharing_sets(const std::vector<SharingGroup>& groups) {
  std::vector<SharingSet> out;
  for (std::uint32_t mask = 0; mask < (1u << groups.size()); ++mask) {
    SharingSet sh;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (mask & (1u << i)) sh.insert(groups[i]);
    }
    out.push_back(std::move(sh));
  }
  return out;
}

std::vector<VarSet> all_var_subsets(const std::vector<Variable>& vars) {
  std::vector<VarSet> out;
  for (std::uint32_t mask = 0; mask < (1u << vars.size()); ++mask) {
    VarSet s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (1u << i)) s.insert(vars[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Term> terms_up_to_depth_two(const std::vector<Variable>& vars) {
  std::vector<Term> depth1;
  depth1.push_back(Term::make("a"));
  for (Variable v : vars) depth1.push_back(Term::var(v));
  std::vector<Term> out = depth1;
  for (const Term& t : depth1) out.push_back(Term::make("f", {t}));
  for (const Term& t1 : depth1) {
    for (const Term& t2 : depth1) out.push_back(Term::make("g", {t1, t2}));
  }
  return out;
}

std::vector<Binding> all_bindings(const std::vector<Variable>& vars,
                                  const std::vector<Term>& terms) {
  std::vector<Binding> out;
  for (Variable x : vars) {
    for (const Term& r : terms) {
      if (r.is_var() && r.as_var() == x) continue;
      out.emplace_back(x, r);
    }
  }
  return out;
}

// --- criterion 2: exhaustive small-universe suite ---------------------------

void law_star_idempotent(Ctx& c) {
  auto sets = all_sharing_sets(all_groups(small_pool(3)));
  for (const SharingSet& sh : sets) {
    SharingSet once = star(sh);
    c.check(star(once) == once, [&] { return "sh=" + sharing_text(sh); });
  }
}

void law_amgu_idempotent(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto bindings = all_bindings(pool, terms_up_to_depth_two(pool));
  for (const SharingSet& sh : sets) {
    for (const Binding& b : bindings) {
      SharingSet once = amgu(sh, b);
      c.check(amgu(once, b) == once, [&] {
        return "sh=" + sharing_text(sh) + " b=" + to_text(b);
      });
    }
  }
}

void law_amgu_commutative(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto bindings = all_bindings(pool, terms_up_to_depth_two(pool));
  for (const SharingSet& sh : sets) {
    for (std::size_t i = 0; i < bindings.size(); ++i) {
      for (std::size_t j = i; j < bindings.size(); ++j) {
        SharingSet left = amgu(amgu(sh, bindings[i]), bindings[j]);
        SharingSet right = amgu(amgu(sh, bindings[j]), bindings[i]);
        c.check(left == right, [&] {
          return "sh=" + sharing_text(sh) + " b1=" + to_text(bindings[i]) +
                 " b2=" + to_text(bindings[j]);
        });
      }
    }
  }
}

void law_bin_star(Ctx& c) {
  auto sets = all_sharing_sets(all_groups(small_pool(3)));
  for (const SharingSet& sh1 : sets) {
    for (const SharingSet& sh2 : sets) {
      c.check(star(bin(sh1, sh2)) == bin(star(sh1), star(sh2)), [&] {
        return "sh1=" + sharing_text(sh1) + " sh2=" + sharing_text(sh2);
      });
    }
  }
}

void law_irel_star(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  for (const VarSet& v : all_var_subsets(pool)) {
    for (const SharingSet& sh : sets) {
      c.check(irel(v, star(sh)) == star(irel(v, sh)), [&] {
        return "V=" + group_text(v) + " sh=" + sharing_text(sh);
      });
    }
  }
}

void law_rel_star_semicommute(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  for (const VarSet& v : all_var_subsets(pool)) {
    for (const SharingSet& sh : sets) {
      c.check(sharing_subset(star(rel(v, sh)), rel(v, star(sh))), [&] {
        return "V=" + group_text(v) + " sh=" + sharing_text(sh);
      });
    }
  }
}

void law_rel_union_star(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto candidates = all_var_subsets(pool);  // includes the empty set
  for (const VarSet& v : all_var_subsets(pool)) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i; j < sets.size(); ++j) {
        const SharingSet& sh1 = sets[i];
        const SharingSet& sh2 = sets[j];
        SharingSet whole = sh1;
        whole.insert(sh2.begin(), sh2.end());
        SharingSet star_whole = star(rel(v, whole));
        SharingSet star1 = star(rel(v, sh1));
        SharingSet star2 = star(rel(v, sh2));
        std::vector<VarSet> left(star1.begin(), star1.end());
        std::vector<VarSet> right(star2.begin(), star2.end());
        left.push_back(VarSet{});
        right.push_back(VarSet{});

        bool ok = true;
        for (const VarSet& s : candidates) {
          bool member = s.empty() || star_whole.count(s) != 0;
          bool decomposed = false;
          for (const VarSet& s1 : left) {
            for (const VarSet& s2 : right) {
              if (set_union(s1, s2) == s) {
                decomposed = true;
                break;
              }
            }
            if (decomposed) break;
          }
          if (member != decomposed) {
            ok = false;
            break;
          }
        }
        c.check(ok, [&] {
          return "V=" + group_text(v) + " sh1=" + sharing_text(sh1) +
                 " sh2=" + sharing_text(sh2);
        });
      }
    }
  }
}

void law_rel_irel(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto subsets = all_var_subsets(pool);
  for (const VarSet& v1 : subsets) {
    for (const VarSet& v2 : subsets) {
      for (const SharingSet& sh : sets) {
        c.check(rel(v1, irel(v2, sh)) == irel(v2, rel(v1, sh)), [&] {
          return "V1=" + group_text(v1) + " V2=" + group_text(v2) +
                 " sh=" + sharing_text(sh);
        });
      }
    }
  }
}

void law_star_rel_monotone(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto subsets = all_var_subsets(pool);
  for (const SharingSet& sh2 : sets) {
    std::vector<SharingGroup> groups(sh2.begin(), sh2.end());
    for (std::uint32_t mask = 0; mask < (1u << groups.size()); ++mask) {
      SharingSet sh1;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (mask & (1u << i)) sh1.insert(groups[i]);
      }
      bool ok = sharing_subset(star(sh1), star(sh2));
      for (const VarSet& v : subsets) {
        if (!sharing_subset(rel(v, sh1), rel(v, sh2))) ok = false;
      }
      c.check(ok, [&] {
        return "sh1=" + sharing_text(sh1) + " sh2=" + sharing_text(sh2);
      });
    }
  }
}

void law_amgu_monotone(Ctx& c) {
  auto pool = small_pool(3);
  auto sets = all_sharing_sets(all_groups(pool));
  auto bindings = all_bindings(pool, terms_up_to_depth_two(pool));
  for (const SharingSet& sh2 : sets) {
    std::vector<SharingGroup> groups(sh2.begin(), sh2.end());
    for (std::uint32_t mask = 0; mask < (1u << groups.size()); ++mask) {
      SharingSet sh1;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (mask & (1u << i)) sh1.insert(groups[i]);
      }
      for (const Binding& b : bindings) {
        c.check(sharing_subset(amgu(sh1, b), amgu(sh2, b)), [&] {
          return "sh1=" + sharing_text(sh1) + " sh2=" + sharing_text(sh2) +
                 " b=" + to_text(b);
        });
      }
    }
  }
}

// --- criterion 3: randomized suite ------------------------------------------

void law_occ_equals_sg(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Idempotent);
    Variable v = c.gen.variable();
    if (occ(sigma, v) == sg(sigma, v)) {
      c.pass();
    } else {
      Substitution small = shrink_substitution(
          sigma, [&](const Substitution& s) { return occ(s, v) != sg_unchecked(s, v); },
          [](const Substitution& s) { return is_idempotent(s); });
      c.fail("sigma=" + to_text(small) + " v=" + default_var_name(v));
    }
  }
}

void law_occ_single_step(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::VariableIdempotent);
    Variable v = c.gen.variable();
    if (occ(sigma, v) == occ_n(sigma, v, 1)) {
      c.pass();
    } else {
      c.fail("sigma=" + to_text(sigma) + " v=" + default_var_name(v));
    }
  }
}

void law_occ_empty_on_domain(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    if (sigma.empty()) continue;
    VarSet dom = sigma.domain();
    Variable v = *std::next(dom.begin(), c.gen.below(static_cast<unsigned>(dom.size())));
    c.check(occ(sigma, v).empty(),
            [&] { return "sigma=" + to_text(sigma) + " v=" + default_var_name(v); });
  }
}

VarSet invariance_universe(Ctx& c, const Substitution& sigma) {
  return set_union(sigma.variables(), c.gen.var_subset(c.gen.pool(), 0.4));
}

void law_alpha_invariant_s_step(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    if (sigma.size() < 2) continue;
    std::vector<Binding> bs = sigma.bindings();
    unsigned i = c.gen.below(static_cast<unsigned>(bs.size()));
    unsigned j = c.gen.below(static_cast<unsigned>(bs.size()));
    if (i == j) continue;
    Substitution stepped = s_step(sigma, bs[i], bs[j]);
    VarSet u = invariance_universe(c, sigma);
    c.check(alpha(sigma, u) == alpha(stepped, u), [&] {
      return "sigma=" + to_text(sigma) + " from=" + to_text(bs[i]) +
             " into=" + to_text(bs[j]) + " U=" + group_text(u);
    });
  }
}

void law_alpha_invariant_normalize(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Substitution normal = to_vsubst(sigma);
    VarSet u = invariance_universe(c, sigma);
    if (alpha(sigma, u) == alpha(normal, u)) {
      c.pass();
    } else {
      Substitution small = shrink_substitution(
          sigma,
          [&](const Substitution& s) {
            return is_rsubst(s) && alpha(s, u) != alpha(to_vsubst(s), u);
          },
          [](const Substitution& s) { return is_rsubst(s); });
      c.fail("sigma=" + to_text(small) + " U=" + group_text(u));
    }
  }
}

void law_alpha_invariant_exchange(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::VariableIdempotent);
    std::vector<Binding> var_bindings;
    for (const Binding& b : sigma.bindings()) {
      if (b.rhs.is_var()) var_bindings.push_back(b);
    }
    if (var_bindings.empty()) continue;
    Binding pick = var_bindings[c.gen.below(static_cast<unsigned>(var_bindings.size()))];
    Substitution swapped = exchange_variables(sigma, pick.lhs, pick.rhs.as_var());
    VarSet u = invariance_universe(c, sigma);
    bool ok = is_rsubst(swapped) && is_var_idempotent(swapped) &&
              swapped.variables() == sigma.variables() &&
              alpha(sigma, u) == alpha(swapped, u);
    c.check(ok, [&] {
      return "sigma=" + to_text(sigma) + " swap=" + to_text(pick) +
             " U=" + group_text(u);
    });
  }
}

void law_alpha_invariant_order(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::VariableIdempotent);
    Substitution ordered = order_vsubst(sigma);
    VarSet u = invariance_universe(c, sigma);
    bool ok = is_ordered(ordered) && is_var_idempotent(ordered) &&
              ordered.variables() == sigma.variables() &&
              alpha(sigma, u) == alpha(ordered, u);
    c.check(ok,
            [&] { return "sigma=" + to_text(sigma) + " ordered=" + to_text(ordered); });
  }
}

void law_normalize_subsets(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Substitution normal = to_vsubst(sigma);
    std::vector<Binding> bs = normal.bindings();
    bool ok = true;
    for (std::uint32_t mask = 0; mask < (1u << bs.size()); ++mask) {
      Substitution subset;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (mask & (1u << i)) subset.bind(bs[i].lhs, bs[i].rhs);
      }
      if (!is_rsubst(subset) || !is_var_idempotent(subset)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      c.pass();
    } else {
      Substitution small = shrink_substitution(
          sigma,
          [&](const Substitution& s) {
            if (!is_rsubst(s)) return false;
            std::vector<Binding> nb = to_vsubst(s).bindings();
            for (std::uint32_t m = 0; m < (1u << nb.size()); ++m) {
              Substitution sub;
              for (std::size_t i = 0; i < nb.size(); ++i) {
                if (m & (1u << i)) sub.bind(nb[i].lhs, nb[i].rhs);
              }
              if (!is_var_idempotent(sub)) return true;
            }
            return false;
          },
          [](const Substitution& s) { return is_rsubst(s); });
      c.fail("sigma=" + to_text(small) + " normalized=" + to_text(to_vsubst(small)));
    }
  }
}

void law_composition_disjoint(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::VariableIdempotent);
    VarSet dom = sigma.domain();
    std::vector<Variable> rest;
    for (Variable v : c.gen.pool()) {
      if (!dom.count(v)) rest.push_back(v);
    }
    if (rest.empty()) continue;
    Substitution tau = c.gen.substitution_from(rest, GenMode::VariableIdempotent);

    Substitution composed = compose(tau, sigma);
    VarSet both = set_union(tau.domain(), sigma.domain());
    bool ok = is_rsubst(composed) && composed.domain() == both &&
              is_var_idempotent(composed);
    c.check(ok, [&] {
      return "tau=" + to_text(tau) + " sigma=" + to_text(sigma) +
             " composed=" + to_text(composed);
    });
  }
}

SSElement random_pair(Ctx& c) {
  std::vector<Variable> head(c.gen.pool());
  if (head.size() > 5) head.erase(head.begin() + 5, head.end());
  VarSet u = c.gen.var_subset(head, 0.7);
  return SSElement::pair(c.gen.sharing_set(u, 0.25), u);
}

EqualityMode random_mode(Ctx& c) {
  return c.gen.coin(0.5) ? EqualityMode::Herbrand : EqualityMode::RationalTrees;
}

void law_aunify_idempotent(Ctx& c) {
  while (!c.done()) {
    SSElement e = random_pair(c);
    Substitution nu = c.gen.substitution(GenMode::Unrestricted);
    EqualityMode mode = random_mode(c);
    SSElement once = aunify(e, nu, mode);
    c.check(aunify(once, nu, mode) == once, [&] {
      return "e=" + to_text(e) + " nu=" + to_text(nu);
    });
  }
}

void law_aunify_order_independent(Ctx& c) {
  while (!c.done()) {
    SSElement e = random_pair(c);
    Substitution nu = c.gen.substitution(GenMode::Unrestricted);
    EqualityMode mode = random_mode(c);

    SSElement canonical = aunify(e, nu, mode);
    SSElement shuffled = e;
    if (!satisfiable(nu, mode)) {
      shuffled = SSElement::bottom();
    } else {
      std::vector<Binding> order = nu.bindings();
      std::shuffle(order.begin(), order.end(), c.gen.rng());
      for (const Binding& b : order) shuffled = amgu(shuffled, b);
    }
    c.check(canonical == shuffled,
            [&] { return "e=" + to_text(e) + " nu=" + to_text(nu); });
  }
}

void law_aunify_amgu_interchange(Ctx& c) {
  while (!c.done()) {
    SSElement e = random_pair(c);
    Substitution nu = c.gen.substitution(GenMode::Unrestricted);
    EqualityMode mode = random_mode(c);
    if (!satisfiable(nu, mode)) continue;

    Variable x = c.gen.variable();
    Term r = c.gen.term(c.gen.options().max_depth);
    if (r.is_var() && r.as_var() == x) continue;
    Binding b(x, r);

    SSElement left = aunify(amgu(e, b), nu, mode);
    SSElement right = amgu(aunify(e, nu, mode), b);
    c.check(left == right, [&] {
      return "e=" + to_text(e) + " nu=" + to_text(nu) + " b=" + to_text(b);
    });
  }
}

// --- criterion 4: soundness --------------------------------------------------

void soundness_cases(Ctx& c, EqualityMode mode) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Substitution nu = c.gen.substitution(GenMode::Unrestricted);
    VarSet u = set_union(sigma.variables(), c.gen.var_subset(c.gen.pool(), 0.3));

    if (mode == EqualityMode::Herbrand && !satisfiable(nu, EqualityMode::Herbrand)) {
      SSElement start = SSElement::pair(c.gen.sharing_set(u, 0.25), u);
      c.check(aunify(start, nu, mode).is_bottom(),
              [&] { return "unsatisfiable nu=" + to_text(nu); });
      continue;
    }

    SoundnessOutcome plain = oracle_soundness(sigma, nu, u, mode);
    if (!plain.applicable) continue;
    if (!plain.holds) {
      c.fail(plain.detail);
      continue;
    }
    SoundnessOutcome padded =
        oracle_soundness(sigma, nu, u, mode, c.gen.sharing_set(u, 0.15));
    c.check(padded.holds, [&] { return "superset case: " + padded.detail; });
  }
}

void law_soundness_rational(Ctx& c) { soundness_cases(c, EqualityMode::RationalTrees); }
void law_soundness_herbrand(Ctx& c) { soundness_cases(c, EqualityMode::Herbrand); }

// --- extra module invariants -------------------------------------------------

void law_free_vars_grow_once(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Term t = c.gen.term(c.gen.options().max_depth);
    VarSet once = set_diff(apply(t, sigma).vars(), sigma.domain());
    c.check(is_subset(once, apply_n(t, sigma, 2).vars()),
            [&] { return "sigma=" + to_text(sigma) + " t=" + to_text(t); });
  }
}

void law_compose_sequential(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Substitution tau = c.gen.substitution(GenMode::Unrestricted);
    Substitution composed = compose(tau, sigma);
    bool ok = true;
    for (Variable v : c.gen.pool()) {
      if (apply(v, composed) != apply(apply(v, sigma), tau)) {
        ok = false;
        break;
      }
    }
    c.check(ok, [&] { return "tau=" + to_text(tau) + " sigma=" + to_text(sigma); });
  }
}

void law_idempotent_is_var_idempotent(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Idempotent);
    c.check(is_var_idempotent(sigma) && classify(sigma).is_var_idempotent,
            [&] { return "sigma=" + to_text(sigma); });
  }
}

void law_unify_solutions(Ctx& c) {
  while (!c.done()) {
    EquationSet e = c.gen.equations(4);
    EqualityMode mode = random_mode(c);
    UnifyResult r = unify(e, mode);
    if (!r.solved()) continue;
    bool ok = is_rsubst(r.solution()) &&
              is_subset(r.solution().variables(), equation_vars(e));
    c.check(ok, [&] {
      return "e=" + equations_text(e) + " mu=" + to_text(r.solution());
    });
  }
}

void law_unify_mode_agreement(Ctx& c) {
  while (!c.done()) {
    EquationSet e = c.gen.equations(4);
    UnifyResult herbrand = unify(e, EqualityMode::Herbrand);
    if (!herbrand.solved()) continue;
    UnifyResult rational = unify(e, EqualityMode::RationalTrees);
    VarSet u = equation_vars(e);
    bool ok = rational.solved() &&
              alpha(herbrand.solution(), u) == alpha(rational.solution(), u);
    c.check(ok, [&] { return "e=" + equations_text(e); });
  }
}

void law_herbrand_solutions_satisfiable(Ctx& c) {
  while (!c.done()) {
    EquationSet e = c.gen.equations(4);
    UnifyResult r = unify(e, EqualityMode::Herbrand);
    if (!r.solved()) continue;
    c.check(satisfiable(r.solution(), EqualityMode::Herbrand), [&] {
      return "e=" + equations_text(e) + " mu=" + to_text(r.solution());
    });
  }
}

void law_s_step_structure(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    if (sigma.size() < 2) continue;
    std::vector<Binding> bs = sigma.bindings();
    unsigned i = c.gen.below(static_cast<unsigned>(bs.size()));
    unsigned j = c.gen.below(static_cast<unsigned>(bs.size()));
    if (i == j) continue;
    Substitution stepped = s_step(sigma, bs[i], bs[j]);
    bool ok = is_rsubst(stepped) && stepped.domain() == sigma.domain() &&
              stepped.variables() == sigma.variables();
    c.check(ok, [&] {
      return "sigma=" + to_text(sigma) + " from=" + to_text(bs[i]) +
             " into=" + to_text(bs[j]);
    });
  }
}

void law_subset_application(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::VariableIdempotent);
    std::vector<Binding> bs = sigma.bindings();
    Substitution subset;
    for (const Binding& b : bs) {
      if (c.gen.coin(0.5)) subset.bind(b.lhs, b.rhs);
    }
    Term t = c.gen.term(c.gen.options().max_depth);
    Term once = apply(t, sigma);
    VarSet left = set_diff(apply(once, subset).vars(), sigma.domain());
    VarSet right = set_diff(once.vars(), sigma.domain());
    c.check(left == right, [&] {
      return "sigma=" + to_text(sigma) + " subset=" + to_text(subset) +
             " t=" + to_text(t);
    });
  }
}

void law_occ_chain_monotone(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Variable v = c.gen.variable();
    unsigned cap = static_cast<unsigned>(sigma.variables().size()) + 2;
    bool ok = true;
    VarSet prev = occ_n(sigma, v, 0);
    for (unsigned n = 1; n <= cap; ++n) {
      VarSet cur = occ_n(sigma, v, n);
      if (!is_subset(prev, cur)) {
        ok = false;
        break;
      }
      prev = cur;
    }
    c.check(ok, [&] { return "sigma=" + to_text(sigma) + " v=" + default_var_name(v); });
  }
}

void law_occ_oracle_agreement(Ctx& c) {
  while (!c.done()) {
    Substitution sigma = c.gen.substitution(GenMode::Unrestricted);
    Variable v = c.gen.variable();
    c.check(occ(sigma, v) == oracle_occ(sigma, v),
            [&] { return "sigma=" + to_text(sigma) + " v=" + default_var_name(v); });
  }
}

void law_star_oracle_agreement(Ctx& c) {
  std::vector<Variable> head(c.gen.pool());
  if (head.size() > 4) head.erase(head.begin() + 4, head.end());
  while (!c.done()) {
    VarSet u = c.gen.var_subset(head, 0.8);
    SharingSet sh = c.gen.sharing_set(u, 0.4);
    if (sh.size() > 12) continue;
    c.check(star(sh) == oracle_star(sh), [&] { return "sh=" + sharing_text(sh); });
  }
}

void law_amgu_lift_laws(Ctx& c) {
  while (!c.done()) {
    SSElement e = random_pair(c);
    Variable x1 = c.gen.variable();
    Term r1 = c.gen.term(2);
    Variable x2 = c.gen.variable();
    Term r2 = c.gen.term(2);
    if ((r1.is_var() && r1.as_var() == x1) || (r2.is_var() && r2.as_var() == x2)) {
      continue;
    }
    Binding b1(x1, r1);
    Binding b2(x2, r2);
    SSElement once = amgu(e, b1);
    bool idem = amgu(once, b1) == once;
    bool comm = amgu(amgu(e, b1), b2) == amgu(amgu(e, b2), b1);
    c.check(idem && comm, [&] {
      return "e=" + to_text(e) + " b1=" + to_text(b1) + " b2=" + to_text(b2);
    });
  }
}

void law_alpha_alternative_solutions(Ctx& c) {
  while (!c.done()) {
    EquationSet e = c.gen.equations(4);
    EquationSet permuted = e;
    std::shuffle(permuted.begin(), permuted.end(), c.gen.rng());
    UnifyResult first = unify(e, EqualityMode::RationalTrees);
    UnifyResult second = unify(permuted, EqualityMode::RationalTrees);
    if (first.solved() != second.solved()) {
      c.fail("e=" + equations_text(e));
      continue;
    }
    if (!first.solved()) continue;
    VarSet u = equation_vars(e);
    c.check(alpha(first.solution(), u) == alpha(second.solution(), u),
            [&] { return "e=" + equations_text(e); });
  }
}

const LawDef kLaws[] = {
    // Exhaustive small-universe suite.
    {"star is idempotent", 2, 0, law_star_idempotent},
    {"amgu is idempotent", 2, 0, law_amgu_idempotent},
    {"amgu is commutative", 2, 0, law_amgu_commutative},
    {"bin commutes with star closure", 2, 0, law_bin_star},
    {"irel commutes with star closure", 2, 0, law_irel_star},
    {"star of a relevant part stays relevant", 2, 0, law_rel_star_semicommute},
    {"relevant part of a union decomposes under star", 2, 0, law_rel_union_star},
    {"rel and irel commute", 2, 0, law_rel_irel},
    {"amgu is monotone in the sharing set", 2, 0, law_amgu_monotone},
    // Randomized suite.
    {"occ coincides with sg on idempotent substitutions", 3, 10000, law_occ_equals_sg},
    {"occ stabilizes after one step on variable-idempotent substitutions", 3, 10000,
     law_occ_single_step},
    {"occ is empty on domain variables", 3, 10000, law_occ_empty_on_domain},
    {"abstraction is invariant under rewriting steps", 3, 10000,
     law_alpha_invariant_s_step},
    {"abstraction is invariant under normalization", 3, 10000,
     law_alpha_invariant_normalize},
    {"abstraction is invariant under variable exchange", 3, 10000,
     law_alpha_invariant_exchange},
    {"abstraction is invariant under ordering", 3, 10000, law_alpha_invariant_order},
    {"normalization makes every subset variable-idempotent", 3, 10000,
     law_normalize_subsets},
    {"composition of disjoint variable-idempotent substitutions", 3, 10000,
     law_composition_disjoint},
    {"aunify is idempotent", 3, 10000, law_aunify_idempotent},
    {"aunify is independent of binding order", 3, 10000, law_aunify_order_independent},
    {"aunify commutes with single-binding steps", 3, 10000, law_aunify_amgu_interchange},
    // Soundness suite.
    {"aunify is sound in rational-trees mode", 4, 5000, law_soundness_rational},
    {"aunify is sound in Herbrand mode", 4, 5000, law_soundness_herbrand},
    // Further module invariants.
    {"star and rel are monotone", 0, 0, law_star_rel_monotone},
    {"application can only grow free variables", 0, 2000, law_free_vars_grow_once},
    {"composition agrees with sequential application", 0, 2000, law_compose_sequential},
    {"idempotent substitutions are variable-idempotent", 0, 2000,
     law_idempotent_is_var_idempotent},
    {"unifier solutions are relevant and in rational solved form", 0, 2000,
     law_unify_solutions},
    {"unifier modes agree on abstractions", 0, 1000, law_unify_mode_agreement},
    {"Herbrand-mode solutions are Herbrand satisfiable", 0, 2000,
     law_herbrand_solutions_satisfiable},
    {"rewriting steps preserve domain and variables", 0, 2000, law_s_step_structure},
    {"subsets apply without changing free variables", 0, 2000, law_subset_application},
    {"occurrence chain is monotone", 0, 2000, law_occ_chain_monotone},
    {"occ agrees with its enumeration oracle", 0, 2000, law_occ_oracle_agreement},
    {"star agrees with its enumeration oracle", 0, 2000, law_star_oracle_agreement},
    {"amgu lifting is idempotent and commutative", 0, 2000, law_amgu_lift_laws},
    {"abstraction agrees across alternative solutions", 0, 1000,
     law_alpha_alternative_solutions},
};

LawResult run_one(const LawDef& def, std::size_t index, const SuiteConfig& config) {
  LawResult res;
  res.name = def.name;
  res.criterion = def.criterion;

  long target =
      def.base_cases == 0
          ? 0
          : std::max<long>(1, static_cast<long>(
                                  static_cast<double>(def.base_cases) * config.scale));
  std::uint64_t seed = config.seed + 0x9E3779B97F4A7C15ull * (index + 1);
  Ctx ctx(seed, target);
  ctx.res = &res;

  auto start = std::chrono::steady_clock::now();
  def.fn(ctx);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const LawDef& def : kLaws) out.emplace_back(def.name);
  return out;
}

std::vector<LawResult> run_laws(const SuiteConfig& config) {
  std::vector<LawResult> out;
  for (std::size_t i = 0; i < std::size(kLaws); ++i) {
    out.push_back(run_one(kLaws[i], i, config));
    if (config.on_result) config.on_result(out.back());
  }
  return out;
}

std::vector<LawResult> run_laws_for_criterion(int criterion,
                                              const SuiteConfig& config) {
  std::vector<LawResult> out;
  for (std::size_t i = 0; i < std::size(kLaws); ++i) {
    if (kLaws[i].criterion == criterion) {
      out.push_back(run_one(kLaws[i], i, config));
      if (config.on_result) config.on_result(out.back());
    }
  }
  return out;
}

}  // namespace setsharing::laws
