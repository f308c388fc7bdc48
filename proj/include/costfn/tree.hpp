// Computation trees over words: ordered unranked trees whose leaves spell
// the word and whose inner nodes combine child values by product,
// idempotent grouping, or stabilisation once the degree passes the
// threshold n. Exact, under and over variants relax node values downward
// or upward.

#ifndef COSTFN_TREE_HPP
#define COSTFN_TREE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costfn/base.hpp"
#include "costfn/monoid.hpp"

namespace costfn {

enum class mode { exact, under, over };

/// Unbounded threshold for plain Ramsey factorisations (no stabilisation
/// nodes, idempotent nodes of any degree >= 2).
inline constexpr std::uint64_t threshold_inf = ~std::uint64_t{0};

struct comp_tree {
  elem value = 0;
  std::vector<comp_tree> children;

  bool is_leaf() const { return children.empty(); }
  unsigned height() const;         // edges on the longest root-leaf path
  unsigned leaf_count() const;
  void leaves(std::vector<elem>& out) const;  // appends the spelled word
};

comp_tree leaf(elem value);
comp_tree node(elem value, std::vector<comp_tree> children);

/// Render as value(child child ...), leaves as bare names.
std::string print_tree(const comp_tree& t, const stab_monoid& m);

/// Why a tree failed to validate. `path` is the child-index path from the
/// root to the offending node (empty = root).
struct tree_defect {
  std::vector<unsigned> path;
  std::string reason;
};

/// Checks that t is an n-computation over `word` for the given mode:
/// leaves spell the word, and every node fits one of the four cases
/// (leaf / binary / idempotent with 2 <= k <= n / stabilisation with
/// k > n). A leaf-count mismatch is reported before any node defect.
std::optional<tree_defect> validate_tree(const stab_monoid& m, const comp_tree& t,
                                         std::span<const elem> word, std::uint64_t n,
                                         mode md = mode::exact);

/// Removes unit letters from an exact computation whose word may mention
/// the unit: subtrees spelling only units collapse to unit leaves and are
/// then dropped from their parent, relabelling where a binary node loses a
/// side. Returns the tree over the unit-free word (a single unit leaf when
/// nothing is left). Value is preserved and the height never grows.
comp_tree sm_normalise(const stab_monoid& m, const comp_tree& t);

/// Inverse direction: given an n-computation t over `word`, build one over
/// `padded` (the same word with unit letters inserted) with the same value
/// and height at most height(t) + 3.
comp_tree sm_extend(const stab_monoid& m, const comp_tree& t, std::span<const elem> word,
                    std::span<const elem> padded);

}  // namespace costfn

#endif  // COSTFN_TREE_HPP
