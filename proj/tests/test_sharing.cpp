#include "test_util.hpp"

#include "setsharing/laws.hpp"

using namespace setsharing;
using namespace testutil;

namespace {
const Variable x{0}, y{1}, z{2};
}

TEST_SUITE("sharing") {

TEST_CASE("star closes under union") {
  CHECK(star({}) == SharingSet{});
  CHECK(star(sh({vs({x}), vs({y})})) == sh({vs({x}), vs({y}), vs({x, y})}));
  CHECK(star(sh({vs({x, y})})) == sh({vs({x, y})}));
  SharingSet three = sh({vs({x}), vs({y}), vs({z})});
  CHECK(star(three).size() == 7);
  CHECK(star(star(three)) == star(three));
}

TEST_CASE("rel and irel split a sharing set") {
  SharingSet s = sh({vs({x, y}), vs({z})});
  CHECK(rel(vs({x}), s) == sh({vs({x, y})}));
  CHECK(irel(vs({x}), s) == sh({vs({z})}));
  CHECK(rel(VarSet{}, s) == SharingSet{});
  CHECK(irel(VarSet{}, s) == s);
}

TEST_CASE("bin forms pairwise unions") {
  CHECK(bin({}, sh({vs({x})})) == SharingSet{});
  CHECK(bin(sh({vs({x})}), sh({vs({y}), vs({z})})) ==
        sh({vs({x, y}), vs({x, z})}));
  // Duplicates collapse: the four pairs give three distinct groups.
  SharingSet both = sh({vs({x}), vs({y})});
  CHECK(bin(both, both) == sh({vs({x}), vs({y}), vs({x, y})}));
}

TEST_CASE("pair elements validate their groups") {
  CHECK_NOTHROW(SSElement::pair(sh({vs({x})}), vs({x, y})));
  CHECK_THROWS_AS(SSElement::pair(sh({vs({x, z})}), vs({x, y})),
                  std::invalid_argument);
  CHECK_THROWS_AS(SSElement::pair(sh({VarSet{}}), vs({x})), std::invalid_argument);
}

TEST_CASE("the order places bottom below everything and top above") {
  SSElement bot = SSElement::bottom();
  SSElement top = SSElement::top();
  SSElement small = SSElement::pair(sh({vs({x})}), vs({x, y}));
  SSElement large = SSElement::pair(sh({vs({x}), vs({y})}), vs({x, y}));
  SSElement other = SSElement::pair(sh({vs({x})}), vs({x}));

  CHECK(leq(bot, bot));
  CHECK(leq(bot, small));
  CHECK(leq(bot, top));
  CHECK(leq(small, top));
  CHECK(leq(small, large));
  CHECK_FALSE(leq(large, small));
  CHECK_FALSE(leq(top, small));
  // Pairs over different universes are incomparable.
  CHECK_FALSE(leq(small, other));
  CHECK_FALSE(leq(other, small));
}

TEST_CASE("least upper bounds") {
  SSElement bot = SSElement::bottom();
  SSElement top = SSElement::top();
  SSElement ex = SSElement::pair(sh({vs({x})}), vs({x, y}));
  SSElement ey = SSElement::pair(sh({vs({y})}), vs({x, y}));

  CHECK(lub(bot, ex) == ex);
  CHECK(lub(ex, bot) == ex);
  CHECK(lub(top, ex) == top);
  CHECK(lub(ex, ey) == SSElement::pair(sh({vs({x}), vs({y})}), vs({x, y})));
  // No pair bounds two pairs with different universes.
  SSElement u1 = SSElement::pair({}, vs({x}));
  SSElement u2 = SSElement::pair({}, vs({x, y}));
  CHECK(lub(u1, u2) == top);
}

TEST_CASE("monotonicity of star and rel") {
  laws::Gen gen(555);
  std::vector<Variable> head = {x, y, z};
  for (int i = 0; i < 200; ++i) {
    VarSet u = gen.var_subset(head, 0.9);
    SharingSet big = gen.sharing_set(u, 0.5);
    SharingSet small;
    for (const SharingGroup& s : big) {
      if (gen.coin(0.5)) small.insert(s);
    }
    SharingSet star_small = star(small);
    SharingSet star_big = star(big);
    for (const SharingGroup& s : star_small) CHECK(star_big.count(s));
    VarSet v = gen.var_subset(head, 0.4);
    for (const SharingGroup& s : rel(v, small)) CHECK(rel(v, big).count(s));
  }
}

TEST_CASE("star agrees with the enumeration oracle") {
  laws::Gen gen(7777);
  std::vector<Variable> head = {x, y, z};
  for (int i = 0; i < 200; ++i) {
    SharingSet s = gen.sharing_set(gen.var_subset(head, 0.8), 0.5);
    CHECK(star(s) == laws::oracle_star(s));
  }
}

}  // TEST_SUITE
