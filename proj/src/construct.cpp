#include "costfn/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace costfn {

namespace {

constexpr std::uint16_t unreachable = std::numeric_limits<std::uint16_t>::max();

// Interval tables for minimal-height Ramsey factorisations. Every exact
// tree without stabilisation nodes has root value pi(span), so per
// interval only the height is free, and a dynamic program over intervals
// finds the optimum: a binary split, or a split into at least two pieces
// sharing one idempotent value.
struct ramsey_tables {
  const stab_monoid& m;
  std::span<const elem> w;
  std::size_t len;
  std::vector<elem> products;
  std::vector<std::uint16_t> minh;

  explicit ramsey_tables(const stab_monoid& mm, std::span<const elem> word)
      : m(mm), w(word), len(word.size()) {
    products.assign((len + 1) * (len + 1), 0);
    minh.assign((len + 1) * (len + 1), unreachable);
    for (std::size_t i = 0; i < len; ++i) {
      products[at(i, i + 1)] = w[i];
      for (std::size_t j = i + 2; j <= len; ++j)
        products[at(i, j)] = m.product(products[at(i, j - 1)], w[j - 1]);
    }
    std::vector<std::vector<std::uint16_t>> best_parts(
        m.size(), std::vector<std::uint16_t>(len + 1, unreachable));
    for (std::size_t i = len; i-- > 0;) {
      for (auto& row : best_parts) row.assign(len + 1, unreachable);
      for (std::size_t s = i + 1; s <= len; ++s) {
        const elem whole = products[at(i, s)];
        std::uint16_t best = s == i + 1 ? 0 : unreachable;
        for (std::size_t t = i + 1; t < s; ++t) {
          const std::uint16_t left = minh[at(i, t)];
          const std::uint16_t right = minh[at(t, s)];
          if (left != unreachable && right != unreachable)
            best = std::min<std::uint16_t>(best, 1 + std::max(left, right));
          const std::uint16_t run = best_parts[whole][t];
          if (m.is_idempotent(whole) && products[at(t, s)] == whole &&
              run != unreachable && right != unreachable)
            best = std::min<std::uint16_t>(best, 1 + std::max(run, right));
        }
        minh[at(i, s)] = best;
        for (std::size_t t = i; t < s; ++t) {
          const elem part = products[at(t, s)];
          const std::uint16_t tail = minh[at(t, s)];
          if (tail == unreachable) continue;
          std::uint16_t reach = t == i ? tail : unreachable;
          if (t > i && best_parts[part][t] != unreachable)
            reach = std::max(best_parts[part][t], tail);
          best_parts[part][s] = std::min(best_parts[part][s], reach);
        }
      }
    }
  }

  std::size_t at(std::size_t i, std::size_t j) const { return i * (len + 1) + j; }

  elem pi(std::size_t i, std::size_t j) const { return products[at(i, j)]; }

  comp_tree rebuild(std::size_t i, std::size_t j) const {
    if (j - i == 1) return leaf(w[i]);
    const std::uint16_t target = minh[at(i, j)];
    for (std::size_t t = i + 1; t < j; ++t)
      if (minh[at(i, t)] < target && minh[at(t, j)] < target)
        return node(pi(i, j), {rebuild(i, t), rebuild(t, j)});
    const elem e = pi(i, j);
    std::vector<std::size_t> parent(j + 1, len + 1);
    for (std::size_t s = i + 1; s <= j; ++s) {
      for (std::size_t t = i; t < s; ++t) {
        if (t != i && parent[t] > len) continue;
        if (pi(t, s) == e && minh[at(t, s)] < target) {
          parent[s] = t;
          break;
        }
      }
    }
    if (!m.is_idempotent(e) || parent[j] > len)
      throw structural_error("internal: interval admits no factorisation step");
    std::vector<std::size_t> cuts;
    for (std::size_t s = j; s != i; s = parent[s]) cuts.push_back(s);
    cuts.push_back(i);
    std::ranges::reverse(cuts);
    std::vector<comp_tree> children;
    children.reserve(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      children.push_back(rebuild(cuts[k], cuts[k + 1]));
    return node(e, std::move(children));
  }
};

}  // namespace

comp_tree ramsey_factorise_smooth(const stab_monoid& m, const j_analysis& j, unsigned j_class,
                                  std::span<const elem> w) {
  if (!is_j_smooth(m, j, w, j_class))
    throw structural_error("word is not smooth for the requested J-class");
  if (w.size() == 1) return leaf(w[0]);
  const ramsey_tables tables(m, w);
  comp_tree t = tables.rebuild(0, w.size());
  const unsigned bound = 3 * popcount(j.classes[j_class]) - 1;
  if (t.height() > bound)
    throw structural_error("internal: smooth factorisation exceeded its height bound");
  return t;
}

namespace {

bool big_degree(const comp_tree& t, std::uint64_t n) {
  return t.children.size() > 2 && t.children.size() > n;
}

struct big_node {
  const comp_tree* where = nullptr;
  std::size_t from = 0;
  std::size_t to = 0;
};

// First big node in depth-first order that has no big node below it.
big_node find_big(const comp_tree& t, std::size_t start, std::uint64_t n) {
  std::size_t pos = start;
  for (const comp_tree& c : t.children) {
    const big_node inner = find_big(c, pos, n);
    if (inner.where != nullptr) return inner;
    pos += c.leaf_count();
  }
  if (big_degree(t, n)) return big_node{&t, start, start + t.leaf_count()};
  return {};
}

// Either a computation for the whole word of value pi(w) and height at
// most 3|J| - 1, or one for a nonempty prefix whose value left the class,
// of height at most 3|J|.
struct base_result {
  bool whole = false;
  std::size_t taken = 0;
  comp_tree tree;
};

base_result correct_big_nodes(const stab_monoid& m, const ramsey_tables& tables,
                              std::size_t length, std::uint64_t n) {
  comp_tree f = tables.rebuild(0, length);
  const big_node big = find_big(f, 0, n);
  if (big.where == nullptr) return base_result{true, length, std::move(f)};
  comp_tree corrected = *big.where;
  corrected.value = m.sharp(corrected.value);
  if (big.from == 0) return base_result{false, big.to, std::move(corrected)};
  const base_result before = correct_big_nodes(m, tables, big.from, n);
  if (!before.whole) return before;
  const elem v = m.product(before.tree.value, corrected.value);
  return base_result{false, big.to,
                     node(v, {std::move(before.tree), std::move(corrected)})};
}

base_result computation_base(const stab_monoid& m, const j_analysis& j, unsigned j_class,
                             std::span<const elem> w, std::uint64_t n) {
  if (w.size() == 1) return base_result{true, 1, leaf(w[0])};
  if (j.stable[j_class]) {
    comp_tree f = ramsey_factorise_smooth(m, j, j_class, w);
    return base_result{true, w.size(), std::move(f)};
  }
  const ramsey_tables tables(m, w);
  return correct_big_nodes(m, tables, w.size(), n);
}

struct star_result {
  std::size_t taken = 0;
  comp_tree tree;
};

// One round of the ideal induction: a computation of height at most 3|J|
// for a nonempty prefix of u; unless the prefix is all of u, its value has
// left the class J and so lies in the smaller ideal.
star_result claim_star(const stab_monoid& m, const j_analysis& j, unsigned j_class,
                       std::span<const elem> u, std::uint64_t n) {
  std::size_t smooth = 0;
  if (j.class_of[u[0]] == j_class) {
    elem acc = u[0];
    smooth = 1;
    while (smooth < u.size() && j.class_of[u[smooth]] == j_class) {
      const elem next = m.product(acc, u[smooth]);
      if (j.class_of[next] != j_class) break;
      acc = next;
      ++smooth;
    }
  }
  if (smooth == 0) return star_result{1, leaf(u[0])};

  base_result base = computation_base(m, j, j_class, u.subspan(0, smooth), n);
  if (!base.whole) return star_result{base.taken, std::move(base.tree)};
  if (smooth == u.size()) return star_result{smooth, std::move(base.tree)};
  const elem joined = m.product(base.tree.value, u[smooth]);
  return star_result{smooth + 1, node(joined, {std::move(base.tree), leaf(u[smooth])})};
}

comp_tree substitute(const comp_tree& shape, const std::vector<comp_tree>& pieces,
                     std::size_t& cursor) {
  if (shape.is_leaf()) return pieces[cursor++];
  std::vector<comp_tree> children;
  children.reserve(shape.children.size());
  for (const comp_tree& c : shape.children) children.push_back(substitute(c, pieces, cursor));
  return node(shape.value, std::move(children));
}

// Induction on the two-sided ideal Z: all letters of u lie in Z except
// possibly the last one.
comp_tree build(const stab_monoid& m, const j_analysis& j, elem_set z,
                std::span<const elem> u, std::uint64_t n) {
  if (u.size() == 1) return leaf(u[0]);
  if (z == 0) throw structural_error("internal: ideal exhausted with letters remaining");

  unsigned chosen = static_cast<unsigned>(j.classes.size());
  for (unsigned c = 0; c < j.classes.size(); ++c) {
    if ((j.classes[c] & ~z) != 0) continue;
    bool topmost = true;
    for (unsigned d = 0; topmost && d < j.classes.size(); ++d) {
      if (d == c || (j.classes[d] & ~z) != 0) continue;
      const elem rep_c = lowest(j.classes[c]);
      const elem rep_d = lowest(j.classes[d]);
      if (j.leq_j(rep_c, rep_d) && !j.leq_j(rep_d, rep_c)) topmost = false;
    }
    if (topmost) {
      chosen = c;
      break;
    }
  }
  if (chosen == j.classes.size())
    throw structural_error("internal: no maximal class inside the ideal");

  std::vector<comp_tree> pieces;
  std::span<const elem> rest = u;
  while (true) {
    star_result step = claim_star(m, j, chosen, rest, n);
    pieces.push_back(std::move(step.tree));
    if (step.taken == rest.size()) break;
    rest = rest.subspan(step.taken);
  }
  if (pieces.size() == 1) return std::move(pieces.front());

  std::vector<elem> values(pieces.size());
  for (std::size_t k = 0; k < pieces.size(); ++k) values[k] = pieces[k].value;
  const comp_tree shape = build(m, j, z & ~j.classes[chosen], values, n);
  std::size_t cursor = 0;
  return substitute(shape, pieces, cursor);
}

}  // namespace

comp_tree construct(const stab_monoid& m, std::span<const elem> w, std::uint64_t n) {
  if (w.empty()) throw structural_error("computations need a nonempty word");
  for (elem x : w)
    if (x >= m.size()) throw structural_error("word letter outside the monoid");
  const j_analysis j = analyze_j(m);
  return build(m, j, full_set(m.size()), w, n);
}

}  // namespace costfn
