#include "support.hpp"

#include "costfn/projection.hpp"

namespace costfn::test {

stab_monoid counta() {
  return stab_monoid({"b", "a", "0"}, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                     {bit(0), bit(1), bit(1) | bit(2)}, {0, 2, 2});
}

stab_monoid sega() {
  return stab_monoid({"1", "a", "b", "0"}, 0,
                     {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3},
                     {bit(0), bit(1), bit(2), bit(1) | bit(2) | bit(3)}, {0, 3, 2, 3});
}

recogniser counta_a_rec() {
  return recogniser{counta(), {"a", "b"}, {1, 0}, bit(2)};
}

recogniser counta_b_rec() {
  return recogniser{counta(), {"a", "b"}, {0, 1}, bit(2)};
}

recogniser sega_rec() {
  return recogniser{sega(), {"a", "b"}, {1, 2}, bit(3)};
}

std::uint64_t direct_count(std::span<const unsigned> u, unsigned letter) {
  std::uint64_t n = 0;
  for (unsigned x : u) n += x == letter ? 1 : 0;
  return n;
}

std::mt19937& rng() {
  static std::mt19937 gen(20240917);
  return gen;
}

namespace {

stab_monoid right_zero_monoid() {
  // 1 is the unit, r and s absorb from the right: x.r = r, x.s = s.
  return lift_monoid({"1", "r", "s"}, 0, {0, 1, 2, 1, 1, 2, 2, 1, 2});
}

stab_monoid full_transformation_monoid_2() {
  // All maps on two states: identity, swap, and the two constants.
  // Composition x.y applies x first. Indices: id=0, sw=1, c0=2, c1=3.
  const auto compose = [](int x, int y) {
    auto apply = [](int f, int q) {
      switch (f) {
        case 0: return q;
        case 1: return 1 - q;
        case 2: return 0;
        default: return 1;
      }
    };
    int a = apply(y, apply(x, 0));
    int b = apply(y, apply(x, 1));
    if (a == 0 && b == 1) return 0;
    if (a == 1 && b == 0) return 1;
    return a == 0 ? 2 : 3;
  };
  std::vector<elem> table(16);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) table[x * 4 + y] = static_cast<elem>(compose(x, y));
  }
  return lift_monoid({"i", "w", "c", "d"}, 0, std::move(table));
}

}  // namespace

const std::vector<stab_monoid>& fuzz_pool() {
  static const std::vector<stab_monoid> pool = [] {
    std::vector<stab_monoid> out;
    out.push_back(counta());
    out.push_back(sega());
    out.push_back(ideal_powerset(counta()).monoid);
    out.push_back(coideal_powerset(counta()).monoid);
    out.push_back(lift_monoid({"1", "g"}, 0, {0, 1, 1, 0}));
    out.push_back(right_zero_monoid());
    out.push_back(full_transformation_monoid_2());
    return out;
  }();
  return pool;
}

std::vector<elem> random_word(const stab_monoid& m, std::size_t len, std::mt19937& gen) {
  std::uniform_int_distribution<elem> pick(0, m.size() - 1);
  std::vector<elem> w(len);
  for (elem& x : w) x = pick(gen);
  return w;
}

namespace {

struct exact_enumerator {
  const stab_monoid& m;
  std::span<const elem> w;
  std::uint64_t n;

  /// All exact trees over w[from, to) with height at most h. A single
  /// position can stand alone as a leaf; internal nodes take any split
  /// into k >= 2 parts, plus k = 1 when the threshold is zero.
  std::vector<comp_tree> trees(std::size_t from, std::size_t to, unsigned h) {
    std::vector<comp_tree> out;
    if (to - from == 1) out.push_back(leaf(w[from]));
    if (h == 0) return out;

    std::vector<std::size_t> cuts{from};
    auto emit_nodes = [&](const std::vector<comp_tree>& picked) {
      const std::size_t k = picked.size();
      const elem first = picked[0].value;
      if (k == 2) out.push_back(node(m.product(first, picked[1].value), picked));
      bool uniform = true;
      for (const comp_tree& c : picked) uniform = uniform && c.value == first;
      if (uniform && m.is_idempotent(first)) {
        if (k >= 2 && k <= n) out.push_back(node(first, picked));
        if (k > n) out.push_back(node(m.sharp(first), picked));
      }
    };
    std::vector<comp_tree> picked;
    auto per_part = [&](auto&& self, std::size_t part) -> void {
      const std::size_t k = cuts.size() - 1;
      if (part == k) {
        emit_nodes(picked);
        return;
      }
      for (comp_tree& option : trees(cuts[part], cuts[part + 1], h - 1)) {
        picked.push_back(std::move(option));
        self(self, part + 1);
        picked.pop_back();
      }
    };
    auto per_cut = [&](auto&& self, std::size_t at) -> void {
      if (at == to) {
        const std::size_t k = cuts.size() - 1;
        if (k >= 2 || n == 0) per_part(per_part, 0);
        return;
      }
      for (std::size_t next = at + 1; next <= to; ++next) {
        cuts.push_back(next);
        self(self, next);
        cuts.pop_back();
      }
    };
    per_cut(per_cut, from);
    return out;
  }
};

}  // namespace

enumeration enumerate_exact(const stab_monoid& m, std::span<const elem> w, std::uint64_t n,
                            unsigned height) {
  exact_enumerator e{m, w, n};
  enumeration result;
  for (comp_tree& t : e.trees(0, w.size(), height)) {
    if (validate_tree(m, t, w, n, mode::exact)) {
      ++result.defects;
    } else {
      result.values |= bit(t.value);
    }
    ++result.trees;
  }
  return result;
}

comp_tree relax_computation(const stab_monoid& m, const comp_tree& exact, mode md,
                            std::mt19937& gen) {
  auto pick = [&](elem_set s) {
    std::vector<elem> options;
    for_each_elem(s, [&](elem x) { options.push_back(x); });
    std::uniform_int_distribution<std::size_t> at(0, options.size() - 1);
    return options[at(gen)];
  };
  auto relax = [&](auto&& self, const comp_tree& t, bool may_change) -> comp_tree {
    if (!may_change) return t;
    if (t.is_leaf()) {
      return leaf(pick(md == mode::under ? m.dn_set(t.value) : m.up_set(t.value)));
    }
    comp_tree out = t;
    if (out.children.size() == 2) {
      out.children[0] = self(self, out.children[0], true);
      out.children[1] = self(self, out.children[1], true);
      const elem target = m.product(out.children[0].value, out.children[1].value);
      out.value = pick(md == mode::under ? m.dn_set(target) : m.up_set(target));
      return out;
    }
    // Idempotent and stabilisation nodes keep their children pinned so the
    // equal-value requirement survives; only the node value is relaxed.
    const elem target = t.value;
    out.value = pick(md == mode::under ? m.dn_set(target) : m.up_set(target));
    return out;
  };
  return relax(relax, exact, true);
}

}  // namespace costfn::test
