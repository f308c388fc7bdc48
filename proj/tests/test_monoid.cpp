// Stabilisation monoid axioms: the two fixtures pass, targeted mutations
// are rejected with the right axiom named, and the constructions
// (lift, product, restriction, closure, morphisms) behave.

#include <algorithm>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "costfn/monoid.hpp"
#include "support.hpp"

namespace costfn::test {
namespace {

bool names_axiom(const std::vector<violation>& report, axiom which) {
  return std::any_of(report.begin(), report.end(),
                     [&](const violation& v) { return v.which == which; });
}

TEST_CASE("fixture monoids satisfy every axiom", "[monoid]") {
  REQUIRE(validate_axioms(counta()).empty());
  REQUIRE(validate_axioms(sega()).empty());
}

TEST_CASE("stabilising a to the unit breaks sharp-decreasing", "[monoid]") {
  stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                  {bit(0), bit(1), bit(1) | bit(2)}, {0, 0, 2});
  auto report = validate_axioms(bad);
  REQUIRE_FALSE(report.empty());
  REQUIRE(names_axiom(report, axiom::sharp_decreasing));
  REQUIRE(std::string(axiom_id(axiom::sharp_decreasing)) == "sharp-decreasing");
}

TEST_CASE("dropping 0 <= a breaks sharp-decreasing and nothing else", "[monoid]") {
  stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                  {bit(0), bit(1), bit(2)}, {0, 2, 2});
  auto report = validate_axioms(bad);
  REQUIRE(report.size() == 1);
  REQUIRE(report[0].which == axiom::sharp_decreasing);
  REQUIRE(report[0].witness == std::vector<elem>{1});
}

TEST_CASE("non-associative table is reported with a witness", "[monoid]") {
  stab_monoid bad({"1", "x", "y"}, 0, {0, 1, 2, 1, 2, 1, 2, 2, 2},
                  {bit(0), bit(1), bit(2)}, {0, no_elem, 2});
  auto report = validate_axioms(bad);
  REQUIRE(names_axiom(report, axiom::associativity));
}

TEST_CASE("wrong unit is reported", "[monoid]") {
  stab_monoid bad({"b", "a", "0"}, 1, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                  {bit(0), bit(1), bit(1) | bit(2)}, {0, 2, 2});
  REQUIRE(names_axiom(validate_axioms(bad), axiom::unit_neutral));
}

TEST_CASE("order defects are reported", "[monoid]") {
  SECTION("missing reflexivity") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {0, bit(1), bit(1) | bit(2)}, {0, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::order_reflexive));
  }
  SECTION("missing transitive edge") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0), bit(0) | bit(1), bit(1) | bit(2)}, {0, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::order_transitive));
  }
  SECTION("two-element cycle") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0) | bit(1), bit(0) | bit(1), bit(1) | bit(2)},
                    {0, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::order_antisymmetric));
  }
}

TEST_CASE("order incompatible with the product is reported", "[monoid]") {
  stab_monoid bad({"1", "x", "y"}, 0, {0, 1, 2, 1, 1, 1, 2, 2, 2},
                  {bit(0), bit(1), bit(0) | bit(2)}, {0, 1, 2});
  REQUIRE(names_axiom(validate_axioms(bad), axiom::product_monotone));
}

TEST_CASE("sharp map defects are reported", "[monoid]") {
  SECTION("missing on an idempotent") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0), bit(1), bit(1) | bit(2)}, {0, no_elem, 2});
    auto report = validate_axioms(bad);
    REQUIRE(names_axiom(report, axiom::sharp_missing));
  }
  SECTION("defined on a non-idempotent") {
    stab_monoid bad({"1", "g"}, 0, {0, 1, 1, 0}, {bit(0), bit(1)}, {0, 0});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::sharp_extra));
  }
  SECTION("not monotone") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0) | bit(1), bit(1), bit(1) | bit(2)}, {0, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::sharp_monotone));
  }
  SECTION("not a fixpoint") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0), bit(1), bit(1) | bit(2)}, {1, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::sharp_fixpoint));
  }
  SECTION("moves the unit") {
    stab_monoid bad({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                    {bit(0), bit(1), bit(1) | bit(2)}, {2, 2, 2});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::sharp_unit));
  }
  SECTION("inconsistent between conjugates") {
    stab_monoid bad({"1", "a", "b", "0"}, 0,
                    {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3},
                    {bit(0), bit(1), bit(2), bit(1) | bit(2) | bit(3)},
                    {0, 3, 0, 3});
    REQUIRE(names_axiom(validate_axioms(bad), axiom::sharp_consistency));
  }
}

TEST_CASE("describe renders axiom and witnesses by name", "[monoid]") {
  const stab_monoid m = counta();
  violation v{axiom::sharp_decreasing, {1}};
  std::string text = describe(v, m);
  REQUIRE(text.find("sharp-decreasing") != std::string::npos);
  REQUIRE(text.find('a') != std::string::npos);
}

TEST_CASE("basic accessors", "[monoid]") {
  const stab_monoid m = counta();
  REQUIRE(m.size() == 3);
  REQUIRE(m.unit() == 0);
  REQUIRE(m.name(1) == "a");
  REQUIRE(m.find("0") == 2);
  REQUIRE(m.find("missing") == no_elem);
  REQUIRE(m.product(1, 1) == 1);
  REQUIRE(m.product(1, 2) == 2);
  REQUIRE(m.leq(2, 1));
  REQUIRE_FALSE(m.leq(1, 2));
  REQUIRE(m.up_set(2) == (bit(1) | bit(2)));
  REQUIRE(m.dn_set(1) == (bit(1) | bit(2)));
  REQUIRE(m.idempotent_set() == (bit(0) | bit(1) | bit(2)));
  REQUIRE(m.sharp(1) == 2);

  std::vector<elem> w{1, 0, 1};
  REQUIRE(m.pi(w) == 1);
  REQUIRE(m.pi({}) == m.unit());

  REQUIRE(m.down_closure(bit(1)) == (bit(1) | bit(2)));
  REQUIRE(m.is_downward_closed(bit(2)));
  REQUIRE_FALSE(m.is_downward_closed(bit(1)));
  REQUIRE(m.is_upward_closed(bit(1)));
}

TEST_CASE("construction rejects malformed shapes", "[monoid]") {
  REQUIRE_THROWS_AS(stab_monoid({"a"}, 0, {0, 0}, {bit(0)}, {0}), structural_error);
  REQUIRE_THROWS_AS(stab_monoid({"a"}, 1, {0}, {bit(0)}, {0}), structural_error);
  REQUIRE_THROWS_AS(stab_monoid({"a"}, 0, {0}, {bit(0), bit(0)}, {0}),
                    structural_error);
  REQUIRE_THROWS_AS(stab_monoid({"a"}, 0, {5}, {bit(0)}, {0}), structural_error);
}

TEST_CASE("lifting a plain monoid gives trivial order and identity sharp",
          "[monoid]") {
  stab_monoid z2 = lift_monoid({"1", "g"}, 0, {0, 1, 1, 0});
  REQUIRE(validate_axioms(z2).empty());
  REQUIRE(z2.leq(0, 0));
  REQUIRE_FALSE(z2.leq(0, 1));
  REQUIRE(z2.sharp_defined(0));
  REQUIRE_FALSE(z2.sharp_defined(1));
  REQUIRE(z2.sharp(0) == 0);
}

TEST_CASE("product monoid works componentwise", "[monoid]") {
  const stab_monoid a = counta();
  const stab_monoid b = sega();
  stab_monoid p = product_monoid(a, b);
  REQUIRE(p.size() == 12);
  REQUIRE(validate_axioms(p).empty());
  REQUIRE(p.unit() == a.unit() * b.size() + b.unit());
  for (elem x = 0; x < a.size(); ++x)
    for (elem y = 0; y < b.size(); ++y)
      for (elem x2 = 0; x2 < a.size(); ++x2)
        for (elem y2 = 0; y2 < b.size(); ++y2) {
          elem left = x * b.size() + y;
          elem right = x2 * b.size() + y2;
          REQUIRE(p.product(left, right) ==
                  a.product(x, x2) * b.size() + b.product(y, y2));
          REQUIRE(p.leq(left, right) == (a.leq(x, x2) && b.leq(y, y2)));
        }
  elem aa = 1 * b.size() + 1;
  REQUIRE(p.is_idempotent(aa));
  REQUIRE(p.sharp(aa) == 2 * b.size() + 3);
}

TEST_CASE("restriction keeps a closed carrier and remaps ids", "[monoid]") {
  const stab_monoid m = counta();
  auto sub = restrict_monoid(m, bit(0) | bit(2));
  REQUIRE(sub.monoid.size() == 2);
  REQUIRE(validate_axioms(sub.monoid).empty());
  REQUIRE(sub.monoid.name(0) == "b");
  REQUIRE(sub.monoid.name(1) == "0");
  REQUIRE(sub.remap == std::vector<elem>{0, no_elem, 1});
  REQUIRE(sub.monoid.product(1, 1) == 1);

  REQUIRE_THROWS_AS(restrict_monoid(m, bit(1) | bit(2)), structural_error);

  stab_monoid z2 = lift_monoid({"1", "g"}, 0, {0, 1, 1, 0});
  REQUIRE_THROWS_AS(restrict_monoid(z2, bit(1)), structural_error);
}

TEST_CASE("generated closure adds the unit, products and sharps", "[monoid]") {
  const stab_monoid m = counta();
  REQUIRE(generated_closure(m, 0) == bit(0));
  REQUIRE(generated_closure(m, bit(1)) == (bit(0) | bit(1) | bit(2)));
  REQUIRE(generated_closure(sega(), bit(2)) == (bit(0) | bit(2)));
}

TEST_CASE("morphisms are checked law by law", "[monoid]") {
  const stab_monoid s = sega();
  const stab_monoid c = counta();

  SECTION("collapsing sega onto counta is a morphism") {
    morphism mu{&s, &c, {0, 1, 2, 2}};
    REQUIRE(check_morphism(mu).empty());

    ideal zero{bit(2)};
    ideal back = pullback_ideal(mu, zero);
    REQUIRE(back.members == (bit(2) | bit(3)));
    REQUIRE(s.is_downward_closed(back.members));
  }

  SECTION("sending b to the unit breaks the product law") {
    morphism mu{&s, &c, {0, 1, 0, 2}};
    auto report = check_morphism(mu);
    REQUIRE_FALSE(report.empty());
    REQUIRE(std::any_of(report.begin(), report.end(), [](const morphism_violation& v) {
      return v.which == morphism_law::product;
    }));
  }

  SECTION("collapsing 0 into a breaks the sharp law") {
    morphism mu{&c, &c, {0, 1, 1}};
    auto report = check_morphism(mu);
    REQUIRE(std::any_of(report.begin(), report.end(), [](const morphism_violation& v) {
      return v.which == morphism_law::sharp;
    }));
  }

  SECTION("mapping into the unordered lift breaks the order law") {
    stab_monoid flat = lift_monoid({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2});
    morphism mu{&c, &flat, {0, 1, 2}};
    auto report = check_morphism(mu);
    REQUIRE(std::any_of(report.begin(), report.end(), [](const morphism_violation& v) {
      return v.which == morphism_law::order;
    }));
  }
}

}  // namespace
}  // namespace costfn::test
