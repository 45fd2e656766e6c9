#include "test_util.hpp"

#include "setsharing/laws.hpp"
#include "setsharing/parser.hpp"

using namespace setsharing;
using namespace testutil;

namespace {

NameFn names_of(const ProblemFile& file) {
  const NameTable& table = file.names;
  return [&table](Variable v) { return table.name(v); };
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("a single equation") {
  ProblemFile file = parse_problem("X = f(X)\n");
  REQUIRE(file.items.size() == 1);
  CHECK_FALSE(file.items[0].is_binding);
  CHECK(file.items[0].lhs.is_var());
  CHECK(file.items[0].rhs == f(file.items[0].lhs));
  CHECK(file.universe().size() == 1);
}

TEST_CASE("the worked unification problem") {
  ProblemFile file = parse_problem("p(Z, f(X,Y)) = p(f(Z,Y), Z)");
  REQUIRE(file.items.size() == 1);
  // First-occurrence order fixes the variable order: Z, X, Y.
  CHECK(file.names.name(Variable(0)) == "Z");
  CHECK(file.names.name(Variable(1)) == "X");
  CHECK(file.names.name(Variable(2)) == "Y");
  const Term& lhs = file.items[0].lhs;
  REQUIRE(lhs.is_compound());
  CHECK(lhs.functor() == "p");
  CHECK(lhs.arity() == 2);
}

TEST_CASE("bindings build a substitution") {
  ProblemFile file = parse_problem("X1 -> f(X2)\nX2 -> g(X3,X4)\nX3 -> X1\n");
  Substitution sigma = file.substitution();
  CHECK(sigma.size() == 3);
  CHECK(sigma.domain() == vs({Variable(0), Variable(1), Variable(2)}));
  CHECK(*sigma.lookup(Variable(2)) == vt(Variable(0)));
}

TEST_CASE("equations with a variable left side count as bindings too") {
  ProblemFile file = parse_problem("X = f(X)");
  Substitution sigma = file.substitution();
  CHECK(sigma.size() == 1);
  CHECK_THROWS_AS(parse_problem("f(X) = X").substitution(), SyntaxError);
  CHECK_THROWS_AS(parse_problem("X = X").substitution(), SyntaxError);
  CHECK_THROWS_AS(parse_problem("X = a\nX = b").substitution(), SyntaxError);
}

TEST_CASE("headers select mode and universe") {
  ProblemFile file =
      parse_problem("% a comment\nmode: herbrand\nuniverse: A, B, C\nA = B\n");
  CHECK(file.mode == EqualityMode::Herbrand);
  CHECK(file.universe_declared);
  CHECK(file.universe() == vs({Variable(0), Variable(1), Variable(2)}));
  CHECK(file.names.name(Variable(2)) == "C");

  CHECK_THROWS_AS(parse_problem("A = B\nmode: rational\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("mode: classical\n"), SyntaxError);
}

TEST_CASE("lowercase names become variables when the universe says so") {
  ProblemFile file = parse_problem("universe: z, x, y\nz = f(x)\n");
  REQUIRE(file.items.size() == 1);
  CHECK(file.items[0].lhs == vt(Variable(0)));
  CHECK(file.items[0].rhs == f(vt(Variable(1))));
}

TEST_CASE("a universe override replaces the declared one") {
  ProblemFile file = parse_problem("universe: A, B\nX = a\n", {"X", "Q"});
  CHECK(file.universe_size == 2);
  CHECK(file.names.name(Variable(0)) == "X");
  CHECK(file.names.name(Variable(1)) == "Q");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_problem("X = f(X)\nY = g(,)\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 7);
  }
  CHECK_THROWS_AS(parse_problem("X\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("X = f(Y"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("X = f(Y)) extra"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("X(a) = b"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("1x = a"), SyntaxError);
}

TEST_CASE("comments and blank lines are skipped") {
  ProblemFile file = parse_problem("\n% nothing here\n  \nX = a % trailing\n");
  CHECK(file.items.size() == 1);
}

TEST_CASE("rendering and parsing round-trip") {
  const Variable x{0}, y{1}, z{2};
  Substitution sigma{Binding(x, f(g(vt(y), a()))), Binding(y, vt(z))};
  auto upper = [](Variable v) { return "X" + std::to_string(v.id() + 1); };
  std::string text = to_problem_text(sigma, upper);
  ProblemFile file = parse_problem(text);
  CHECK(file.substitution() == sigma);
  CHECK(to_problem_text(file.substitution(), names_of(file)) == text);
}

TEST_CASE("random substitutions survive the round-trip") {
  laws::Gen gen(31007);
  auto upper = [](Variable v) { return "X" + std::to_string(v.id() + 1); };
  for (int i = 0; i < 200; ++i) {
    Substitution sigma = gen.substitution(laws::GenMode::Unrestricted);
    // Interning follows first occurrence, which may permute ids against
    // the generator's numbering; one parse canonicalizes, after which
    // render and parse are mutual inverses.
    ProblemFile first = parse_problem(to_problem_text(sigma, upper));
    std::string canonical = to_problem_text(first.substitution(), names_of(first));
    ProblemFile second = parse_problem(canonical);
    CHECK(to_problem_text(second.substitution(), names_of(second)) == canonical);
    CHECK(second.substitution().size() == sigma.size());
  }
}

TEST_CASE("element rendering") {
  const Variable x{0}, y{1};
  CHECK(to_text(SSElement::bottom()) == "bottom");
  CHECK(to_text(SSElement::top()) == "top");
  CHECK(to_text(SSElement::pair(sh({vs({x, y}), vs({x})}), vs({x, y}))) ==
        "{{x1},{x1,x2}}");
  CHECK(to_text(Substitution{Binding(x, f(vt(y)))}) == "{x1 -> f(x2)}");
  CHECK(to_text(Substitution{}) == "{}");
}

}  // TEST_SUITE
