#include "costfn/tree.hpp"

#include <algorithm>
#include <sstream>

namespace costfn {

unsigned comp_tree::height() const {
  unsigned h = 0;
  for (const comp_tree& c : children) h = std::max(h, 1 + c.height());
  return h;
}

unsigned comp_tree::leaf_count() const {
  if (is_leaf()) return 1;
  unsigned total = 0;
  for (const comp_tree& c : children) total += c.leaf_count();
  return total;
}

void comp_tree::leaves(std::vector<elem>& out) const {
  if (is_leaf()) {
    out.push_back(value);
    return;
  }
  for (const comp_tree& c : children) c.leaves(out);
}

comp_tree leaf(elem value) { return comp_tree{value, {}}; }

comp_tree node(elem value, std::vector<comp_tree> children) {
  return comp_tree{value, std::move(children)};
}

void print_tree(std::ostream& os, const comp_tree& t, const stab_monoid& m) {
  os << m.name(t.value);
  if (t.is_leaf()) return;
  os << '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) os << ' ';
    print_tree(os, t.children[i], m);
  }
  os << ')';
}

std::string print_tree(const comp_tree& t, const stab_monoid& m) {
  std::ostringstream os;
  print_tree(os, t, m);
  return os.str();
}

namespace {

bool rel_holds(const stab_monoid& m, mode md, elem value, elem target) {
  switch (md) {
    case mode::exact: return value == target;
    case mode::under: return m.leq(value, target);
    case mode::over: return m.leq(target, value);
  }
  return false;
}

const char* rel_word(mode md) {
  switch (md) {
    case mode::exact: return "equal";
    case mode::under: return "at most";
    case mode::over: return "at least";
  }
  return "equal";
}

struct tree_checker {
  const stab_monoid& m;
  std::span<const elem> word;
  std::uint64_t n;
  mode md;
  std::size_t cursor = 0;
  std::vector<unsigned> path;

  std::optional<tree_defect> fail(const std::string& reason) const {
    return tree_defect{path, reason};
  }

  std::optional<tree_defect> check(const comp_tree& t) {
    const std::size_t k = t.children.size();
    if (k == 0) {
      const elem letter = word[cursor++];
      if (!rel_holds(m, md, t.value, letter))
        return fail("leaf value " + m.name(t.value) + " is not " + rel_word(md) +
              " the word letter " + m.name(letter));
      return std::nullopt;
    }
    for (std::size_t i = 0; i < k; ++i) {
      path.push_back(static_cast<unsigned>(i));
      if (auto defect = check(t.children[i])) return defect;
      path.pop_back();
    }
    if (k == 2) {
      const elem prod = m.product(t.children[0].value, t.children[1].value);
      if (rel_holds(m, md, t.value, prod)) return std::nullopt;
    }
    const elem e = t.children[0].value;
    bool equal_idem = m.is_idempotent(e);
    for (const comp_tree& c : t.children) equal_idem = equal_idem && c.value == e;
    if (!equal_idem) {
      if (k == 2)
        return fail("binary node value " + m.name(t.value) + " is not " + rel_word(md) +
              " the product " + m.name(t.children[0].value) + "." +
              m.name(t.children[1].value) +
              " and the children are not copies of one idempotent");
      return fail("node of degree " + std::to_string(k) +
            " needs all children equal to one idempotent");
    }
    if (k <= n) {
      if (k < 2) return fail("node of degree 1 is only allowed above the threshold");
      if (rel_holds(m, md, t.value, e)) return std::nullopt;
      return fail("idempotent node value " + m.name(t.value) + " is not " + rel_word(md) +
            " the child value " + m.name(e));
    }
    if (!m.sharp_defined(e))
      return fail("stabilisation node over " + m.name(e) + " which has no sharp");
    if (rel_holds(m, md, t.value, m.sharp(e))) return std::nullopt;
    return fail("stabilisation node value " + m.name(t.value) + " is not " + rel_word(md) +
          " " + m.name(e) + " sharp");
  }
};

}  // namespace

std::optional<tree_defect> validate_tree(const stab_monoid& m, const comp_tree& t,
                    std::span<const elem> word, std::uint64_t n, mode md) {
  const unsigned spelled = t.leaf_count();
  if (spelled != word.size())
    return tree_defect{{}, "tree spells " + std::to_string(spelled) +
                 " letters but the word has " + std::to_string(word.size())};
  tree_checker checker{m, word, n, md};
  return checker.check(t);
}

namespace {

bool is_unit_leaf(const stab_monoid& m, const comp_tree& t) {
  return t.is_leaf() && t.value == m.unit();
}

comp_tree normalise_rec(const stab_monoid& m, const comp_tree& t) {
  if (t.is_leaf()) return t;
  std::vector<comp_tree> kept;
  kept.reserve(t.children.size());
  for (const comp_tree& c : t.children) {
    comp_tree nc = normalise_rec(m, c);
    if (!is_unit_leaf(m, nc)) kept.push_back(std::move(nc));
  }
  if (kept.empty()) return leaf(t.value);
  if (kept.size() == 1) {
    comp_tree only = std::move(kept.front());
    only.value = t.value;
    return only;
  }
  return node(t.value, std::move(kept));
}

comp_tree units_tree(const stab_monoid& m, std::size_t count) {
  if (count == 1) return leaf(m.unit());
  return node(m.unit(), std::vector<comp_tree>(count, leaf(m.unit())));
}

/// A computation for one padded block: j unit letters, the block letter
/// carried by the original leaf, then r unit letters. Height is at most 3
/// and the value stays the leaf value.
comp_tree block_tree(const stab_monoid& m, const comp_tree& original, std::size_t j,
          std::size_t r) {
  comp_tree core = original;
  if (r > 0) core = node(core.value, {std::move(core), units_tree(m, r)});
  if (j > 0) core = node(core.value, {units_tree(m, j), std::move(core)});
  return core;
}

void collect_leaves(const comp_tree& t, std::vector<const comp_tree*>& out) {
  if (t.is_leaf()) {
    out.push_back(&t);
    return;
  }
  for (const comp_tree& c : t.children) collect_leaves(c, out);
}

comp_tree substitute_blocks(const comp_tree& t, const std::vector<comp_tree>& blocks,
              std::size_t& cursor) {
  if (t.is_leaf()) return blocks[cursor++];
  std::vector<comp_tree> children;
  children.reserve(t.children.size());
  for (const comp_tree& c : t.children) children.push_back(substitute_blocks(c, blocks, cursor));
  return node(t.value, std::move(children));
}

}  // namespace

comp_tree sm_normalise(const stab_monoid& m, const comp_tree& t) {
  return normalise_rec(m, t);
}

comp_tree sm_extend(const stab_monoid& m, const comp_tree& t, std::span<const elem> word,
          std::span<const elem> padded) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < padded.size(); ++i)
    if (padded[i] != m.unit()) positions.push_back(i);
  bool matches = positions.size() == word.size();
  for (std::size_t k = 0; matches && k < word.size(); ++k)
    matches = padded[positions[k]] == word[k];
  if (!matches)
    throw structural_error("the padded word does not reduce to the computation's word");
  if (word.empty()) {
    if (padded.empty()) throw structural_error("a computation needs at least one letter");
    return padded.size() == 1 ? leaf(m.unit()) : units_tree(m, padded.size());
  }
  if (t.leaf_count() != word.size())
    throw structural_error("the computation does not spell the given word");

  std::vector<const comp_tree*> leaves;
  leaves.reserve(word.size());
  collect_leaves(t, leaves);

  std::vector<comp_tree> blocks;
  blocks.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    const std::size_t lo = k == 0 ? 0 : positions[k - 1] + 1;
    const std::size_t hi = k + 1 == word.size() ? padded.size() : positions[k] + 1;
    blocks.push_back(block_tree(m, *leaves[k], positions[k] - lo, hi - positions[k] - 1));
  }
  std::size_t cursor = 0;
  return substitute_blocks(t, blocks, cursor);
}

}  // namespace costfn
