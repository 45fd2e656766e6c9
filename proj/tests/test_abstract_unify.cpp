#include "test_util.hpp"

#include "setsharing/laws.hpp"

using namespace setsharing;
using namespace testutil;

namespace {
const Variable x{0}, y{1}, z{2};

Term f2(Term s, Term t) { return Term::make("f", {std::move(s), std::move(t)}); }
}  // namespace

TEST_SUITE("abstract-unify") {

TEST_CASE("amgu of a binding against singleton groups") {
  SharingSet start = sh({vs({x}), vs({y}), vs({z})});
  CHECK(amgu(start, Binding(x, f2(vt(y), vt(z)))) ==
        sh({vs({x, y}), vs({x, z}), vs({x, y, z})}));
}

TEST_CASE("amgu ignores bindings over absent variables") {
  SharingSet s = sh({vs({y})});
  CHECK(amgu(s, Binding(x, f(vt(z)))) == s);
}

TEST_CASE("amgu aliases two variables") {
  CHECK(amgu(sh({vs({x}), vs({y})}), Binding(x, vt(y))) == sh({vs({x, y})}));
}

TEST_CASE("amgu grounds a variable bound to a constant") {
  CHECK(amgu(sh({vs({x})}), Binding(x, a())) == SharingSet{});
  CHECK(amgu(sh({vs({x}), vs({x, y}), vs({z})}), Binding(x, a())) == sh({vs({z})}));
}

TEST_CASE("the lifted amgu extends the universe") {
  SSElement e = SSElement::pair(sh({vs({x})}), vs({x}));
  CHECK(amgu(e, Binding(x, vt(y))) ==
        SSElement::pair(sh({vs({x, y})}), vs({x, y})));

  SSElement closed = SSElement::pair(sh({vs({x}), vs({y})}), vs({x, y}));
  CHECK(amgu(closed, Binding(x, vt(y))) ==
        SSElement::pair(sh({vs({x, y})}), vs({x, y})));

  // A fresh variable bound to a constant is ground from the start.
  CHECK(amgu(SSElement::pair({}, {}), Binding(x, a())) ==
        SSElement::pair({}, vs({x})));

  CHECK_THROWS_AS(amgu(SSElement::bottom(), Binding(x, a())), std::logic_error);
  CHECK_THROWS_AS(amgu(SSElement::top(), Binding(x, a())), std::logic_error);
}

TEST_CASE("aunify folds a substitution") {
  SSElement start = SSElement::pair(sh({vs({x}), vs({y})}), vs({x, y}));
  CHECK(aunify(start, Substitution{Binding(x, vt(y))},
               EqualityMode::RationalTrees) ==
        SSElement::pair(sh({vs({x, y})}), vs({x, y})));
}

TEST_CASE("aunify maps unsatisfiable substitutions to bottom") {
  SSElement start = SSElement::pair(sh({vs({x})}), vs({x}));
  Substitution self{Binding(x, f(vt(x)))};
  CHECK(aunify(start, self, EqualityMode::Herbrand) == SSElement::bottom());
  CHECK(aunify(start, self, EqualityMode::RationalTrees) ==
        SSElement::pair(sh({vs({x})}), vs({x})));
}

TEST_CASE("aunify fixes the empty substitution and the poles") {
  SSElement start = SSElement::pair(sh({vs({x})}), vs({x, y}));
  for (EqualityMode mode : {EqualityMode::Herbrand, EqualityMode::RationalTrees}) {
    CHECK(aunify(start, Substitution{}, mode) == start);
    CHECK(aunify(SSElement::bottom(), Substitution{Binding(x, a())}, mode) ==
          SSElement::bottom());
    CHECK(aunify(SSElement::top(), Substitution{Binding(x, f(vt(x)))}, mode) ==
          SSElement::top());
  }
  Substitution circular{Binding(x, vt(y)), Binding(y, vt(x))};
  CHECK_THROWS_AS(aunify(start, circular, EqualityMode::Herbrand),
                  std::invalid_argument);
}

TEST_CASE("smallest soundness instance by hand") {
  // Empty sigma, nu = {x -> y}: the unifier gives {x -> y} and both the
  // concrete and the abstract side land on {{x,y}}.
  VarSet u = vs({x, y});
  laws::SoundnessOutcome out = laws::oracle_soundness(
      Substitution{}, Substitution{Binding(x, vt(y))}, u, EqualityMode::RationalTrees);
  REQUIRE(out.applicable);
  CHECK(out.holds);
  UnifyResult mu = unify({Equation{vt(x), vt(y)}}, EqualityMode::RationalTrees);
  REQUIRE(mu.solved());
  CHECK(alpha(mu.solution(), u) == SSElement::pair(sh({vs({x, y})}), u));
  CHECK(aunify(alpha(Substitution{}, u), Substitution{Binding(x, vt(y))},
               EqualityMode::RationalTrees) ==
        SSElement::pair(sh({vs({x, y})}), u));
}

TEST_CASE("aunify idempotence, order independence and interchange on samples") {
  laws::Gen gen(2024);
  std::vector<Variable> head = {x, y, z};
  for (int i = 0; i < 300; ++i) {
    VarSet u = gen.var_subset(head, 0.7);
    SSElement e = SSElement::pair(gen.sharing_set(u, 0.3), u);
    Substitution nu = gen.substitution(laws::GenMode::Unrestricted);
    EqualityMode mode =
        gen.coin(0.5) ? EqualityMode::Herbrand : EqualityMode::RationalTrees;

    SSElement once = aunify(e, nu, mode);
    CHECK(aunify(once, nu, mode) == once);

    if (satisfiable(nu, mode)) {
      Variable extra = gen.variable();
      Term rhs = gen.term(2);
      if (rhs.is_var() && rhs.as_var() == extra) continue;
      Binding b(extra, rhs);
      CHECK(aunify(amgu(e, b), nu, mode) == amgu(aunify(e, nu, mode), b));
    }
  }
}

}  // TEST_SUITE
