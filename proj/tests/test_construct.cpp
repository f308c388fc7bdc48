// Ramsey factorisations of smooth words and the full computation
// construction: pinned outputs on the counting monoid, minimal heights,
// the 3|M| height bound, and validation across a fuzzing pool.

#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "costfn/construct.hpp"
#include "costfn/oracle.hpp"
#include "support.hpp"

namespace costfn::test {
namespace {

stab_monoid z3() {
  return lift_monoid({"1", "g", "h"}, 0, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}

unsigned minimal_stab_free_height(const stab_monoid& m, std::span<const elem> w) {
  const elem target = m.pi(w);
  for (unsigned h = 0;; ++h)
    if (has(achievable_values(m, w, threshold_inf, h, mode::exact), target)) return h;
}

TEST_CASE("construct reproduces the documented trees", "[construct]") {
  const stab_monoid m = counta();

  std::vector<elem> eight(8, 1);
  comp_tree wide = construct(m, eight, 2);
  REQUIRE(print_tree(wide, m) == "0(a a a a a a a a)");
  REQUIRE_FALSE(validate_tree(m, wide, eight, 2));

  std::vector<elem> ab{1, 0};
  comp_tree pair = construct(m, ab, 5);
  REQUIRE(print_tree(pair, m) == "a(a b)");
  REQUIRE_FALSE(validate_tree(m, pair, ab, 5));
}

TEST_CASE("construct handles the edges of its domain", "[construct]") {
  const stab_monoid m = counta();

  REQUIRE_THROWS_AS(construct(m, {}, 1), structural_error);

  std::vector<elem> one{2};
  comp_tree single = construct(m, one, 3);
  REQUIRE(single.is_leaf());
  REQUIRE(single.value == 2);

  std::vector<elem> aa{1, 1};
  comp_tree zero = construct(m, aa, 0);
  REQUIRE_FALSE(validate_tree(m, zero, aa, 0));
}

TEST_CASE("construct is deterministic", "[construct]") {
  const stab_monoid m = sega();
  std::vector<elem> w{1, 2, 1, 1, 2, 1, 1, 1};
  REQUIRE(print_tree(construct(m, w, 2), m) == print_tree(construct(m, w, 2), m));
}

TEST_CASE("ramsey factorisation stays inside one class", "[construct]") {
  const stab_monoid m = counta();
  j_analysis j = analyze_j(m);

  SECTION("a power of an idempotent folds into one node") {
    std::vector<elem> aaa{1, 1, 1};
    comp_tree t = ramsey_factorise_smooth(m, j, j.class_of[1], aaa);
    REQUIRE(t.height() == 1);
    REQUIRE(t.value == 1);
    REQUIRE_FALSE(validate_tree(m, t, aaa, threshold_inf));
  }

  SECTION("a single letter is a leaf") {
    std::vector<elem> one{0};
    comp_tree t = ramsey_factorise_smooth(m, j, j.class_of[0], one);
    REQUIRE(t.is_leaf());
  }

  SECTION("non-smooth words are rejected") {
    std::vector<elem> ab{1, 0};
    REQUIRE_THROWS_AS(ramsey_factorise_smooth(m, j, j.class_of[1], ab),
                      structural_error);
    REQUIRE_THROWS_AS(ramsey_factorise_smooth(m, j, 0, {}), structural_error);
  }
}

TEST_CASE("ramsey factorisations have minimal height", "[construct]") {
  std::mt19937& gen = rng();
  const stab_monoid monoids[] = {lift_monoid({"1", "g"}, 0, {0, 1, 1, 0}), z3()};

  for (const stab_monoid& m : monoids) {
    j_analysis j = analyze_j(m);
    REQUIRE(j.classes.size() == 1);
    const unsigned bound = 3 * static_cast<unsigned>(popcount(j.classes[0])) - 1;

    for (unsigned round = 0; round < 25; ++round) {
      std::size_t len = 1 + gen() % 8;
      std::vector<elem> w = random_word(m, len, gen);
      comp_tree t = ramsey_factorise_smooth(m, j, 0, w);
      REQUIRE_FALSE(validate_tree(m, t, w, threshold_inf));
      REQUIRE(t.value == m.pi(w));
      REQUIRE(t.height() <= bound);
      REQUIRE(t.height() == minimal_stab_free_height(m, w));
    }
  }
}

TEST_CASE("long smooth group words respect the class height bound", "[construct]") {
  std::mt19937& gen = rng();
  const stab_monoid m = z3();
  j_analysis j = analyze_j(m);
  const unsigned bound = 3 * 3 - 1;

  for (unsigned round = 0; round < 10; ++round) {
    std::size_t len = 20 + gen() % 120;
    std::vector<elem> w = random_word(m, len, gen);
    comp_tree t = ramsey_factorise_smooth(m, j, 0, w);
    REQUIRE_FALSE(validate_tree(m, t, w, threshold_inf));
    REQUIRE(t.value == m.pi(w));
    REQUIRE(t.height() <= bound);
  }
}

TEST_CASE("random instances validate within the 3|M| height bound", "[construct]") {
  std::mt19937& gen = rng();
  const std::vector<stab_monoid>& pool = fuzz_pool();
  const std::uint64_t thresholds[] = {1, 2, 5, 17};

  for (unsigned round = 0; round < 40; ++round) {
    const stab_monoid& m = pool[round % pool.size()];
    std::uint64_t n = thresholds[round % 4];
    std::size_t len = 1 + gen() % 200;
    std::vector<elem> w = random_word(m, len, gen);

    comp_tree t = construct(m, w, n);
    auto defect = validate_tree(m, t, w, n);
    if (defect) {
      INFO("monoid of size " << m.size() << ", |w| = " << len << ", n = " << n
                             << ": " << defect->reason);
      REQUIRE_FALSE(defect);
    }
    REQUIRE(t.height() <= 3 * m.size());
  }
}

}  // namespace
}  // namespace costfn::test
