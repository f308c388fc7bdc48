// J-class decomposition, regularity and stability flags, idempotent power
// data, and the smooth word predicate.

#include "catch2/catch_amalgamated.hpp"
#include "costfn/green.hpp"
#include "support.hpp"

namespace costfn::test {
namespace {

// Words over {x, y} where xx, yy and yx all collapse to zero. Elements:
// 1, x, y, p = xy, 0. All J-classes are singletons and the class of x is
// not closed under products.
stab_monoid nilpotent() {
  return lift_monoid({"1", "x", "y", "p", "0"}, 0,
                     {0, 1, 2, 3, 4,
                      1, 4, 3, 4, 4,
                      2, 4, 4, 4, 4,
                      3, 4, 4, 4, 4,
                      4, 4, 4, 4, 4});
}

TEST_CASE("counta splits into three singleton classes", "[green]") {
  const stab_monoid m = counta();
  j_analysis j = analyze_j(m);

  REQUIRE(j.classes.size() == 3);
  REQUIRE(j.class_of == std::vector<unsigned>{0, 1, 2});
  REQUIRE(j.classes[0] == bit(0));
  REQUIRE(j.classes[1] == bit(1));
  REQUIRE(j.classes[2] == bit(2));

  REQUIRE(j.regular == std::vector<bool>{true, true, true});
  REQUIRE(j.stable == std::vector<bool>{true, false, true});
  REQUIRE(j.sharp_class[0] == 0);
  REQUIRE(j.sharp_class[1] == 2);
  REQUIRE(j.sharp_class[2] == 2);

  REQUIRE(j.below[0] == (bit(0) | bit(1) | bit(2)));
  REQUIRE(j.below[1] == (bit(1) | bit(2)));
  REQUIRE(j.below[2] == bit(2));
  REQUIRE(j.leq_j(2, 0));
  REQUIRE_FALSE(j.leq_j(0, 1));
}

TEST_CASE("sega orders its classes by divisibility", "[green]") {
  const stab_monoid m = sega();
  j_analysis j = analyze_j(m);

  REQUIRE(j.classes.size() == 4);
  REQUIRE(j.stable == std::vector<bool>{true, false, true, true});
  REQUIRE(j.sharp_class == std::vector<unsigned>{0, 3, 2, 3});
  REQUIRE(j.below[1] == (bit(1) | bit(2) | bit(3)));
  REQUIRE(j.below[2] == (bit(2) | bit(3)));
}

TEST_CASE("group elements share one class and nilpotents do not", "[green]") {
  stab_monoid z2 = lift_monoid({"1", "g"}, 0, {0, 1, 1, 0});
  j_analysis jz = analyze_j(z2);
  REQUIRE(jz.classes.size() == 1);
  REQUIRE(jz.classes[0] == (bit(0) | bit(1)));
  REQUIRE(jz.regular[0]);
  REQUIRE(jz.stable[0]);

  stab_monoid nil = nilpotent();
  j_analysis jn = analyze_j(nil);
  REQUIRE(jn.classes.size() == 5);
  REQUIRE_FALSE(jn.regular[jn.class_of[1]]);
  REQUIRE(jn.leq_j(3, 1));
  REQUIRE(jn.leq_j(3, 2));
  REQUIRE_FALSE(jn.leq_j(1, 2));
}

TEST_CASE("omega is the least exponent reaching an idempotent power", "[green]") {
  omega_data all_idem = compute_omega(counta());
  REQUIRE(all_idem.omega == 1);
  REQUIRE(all_idem.omega_power == std::vector<elem>{0, 1, 2});
  REQUIRE(all_idem.omega_sharp == std::vector<elem>{0, 2, 2});

  stab_monoid z2 = lift_monoid({"1", "g"}, 0, {0, 1, 1, 0});
  omega_data group = compute_omega(z2);
  REQUIRE(group.omega == 2);
  REQUIRE(group.omega_power == std::vector<elem>{0, 0});
  REQUIRE(group.omega_sharp == std::vector<elem>{0, 0});

  omega_data nil = compute_omega(nilpotent());
  REQUIRE(nil.omega == 2);
  REQUIRE(nil.omega_power == std::vector<elem>{0, 4, 4, 4, 4});
}

TEST_CASE("smoothness needs every letter and every product in the class",
          "[green]") {
  const stab_monoid m = counta();
  j_analysis j = analyze_j(m);

  std::vector<elem> aa{1, 1};
  std::vector<elem> ab{1, 0};
  std::vector<elem> just_b{0};
  REQUIRE(is_j_smooth(m, j, aa, j.class_of[1]));
  REQUIRE_FALSE(is_j_smooth(m, j, ab, j.class_of[1]));
  REQUIRE(is_j_smooth(m, j, just_b, j.class_of[0]));
  REQUIRE_THROWS_AS(is_j_smooth(m, j, {}, 0), structural_error);

  stab_monoid nil = nilpotent();
  j_analysis jn = analyze_j(nil);
  std::vector<elem> xx{1, 1};
  std::vector<elem> x{1};
  REQUIRE(is_j_smooth(nil, jn, x, jn.class_of[1]));
  REQUIRE_FALSE(is_j_smooth(nil, jn, xx, jn.class_of[1]));

  stab_monoid z2 = lift_monoid({"1", "g"}, 0, {0, 1, 1, 0});
  j_analysis jz = analyze_j(z2);
  std::vector<elem> ggg{1, 1, 1};
  REQUIRE(is_j_smooth(z2, jz, ggg, 0));
}

}  // namespace
}  // namespace costfn::test
