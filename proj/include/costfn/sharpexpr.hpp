// Sharp-expressions: words with an omega-sharp power operator, their
// values, unfoldings, canonical computations, and the sharp-closure used
// by the decision procedures.

#ifndef COSTFN_SHARPEXPR_HPP
#define COSTFN_SHARPEXPR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costfn/monoid.hpp"
#include "costfn/tree.hpp"

namespace costfn {

enum class expr_kind { letter, concat, omega_sharp };

/// Expression over letters built from concatenation and the omega-sharp
/// power, written `(...)#`. Letters carry an unsigned id whose meaning
/// (alphabet index or monoid element) depends on the caller.
struct sharp_expr {
  expr_kind kind = expr_kind::letter;
  unsigned letter = 0;
  std::vector<sharp_expr> subs;
};

sharp_expr xletter(unsigned id);
sharp_expr xconcat(sharp_expr left, sharp_expr right);
sharp_expr xsharp(sharp_expr sub);

/// True iff the expression contains at least one omega-sharp node.
bool is_strict(const sharp_expr& e);

/// Rewrites every letter id through the given map, keeping the shape.
sharp_expr map_letters(const sharp_expr& e, std::span<const unsigned> to);

/// Parses `b(a)#` style syntax: letters, juxtaposition for concatenation,
/// `(...)` for grouping and `(...)#` for omega-sharp. Letter tokens are
/// matched against the given names, longest match first. Letter ids in the
/// result are indices into `letters`. Throws io_error on bad input.
sharp_expr parse_expr(std::string_view text, std::span<const std::string> letters);

std::string print_expr(const sharp_expr& e, std::span<const std::string> letters);

/// Evaluates an expression whose letters are monoid elements:
/// concatenation multiplies and `(...)#` maps x to (x^Omega) sharp, where
/// Omega is the least exponent making every power idempotent.
elem expr_value(const stab_monoid& m, const sharp_expr& e);

/// The n-unfolding: each omega-sharp node expands to n copies of the
/// unfolding of its body. Requires n >= 1.
std::vector<unsigned> unfold(const sharp_expr& e, std::uint64_t n);

/// A computation for the word unfold(e, Omega*(n+1)) with value
/// expr_value(m, e). Every omega-sharp node becomes a stabilisation node of
/// degree n+1, so the tree validates at threshold n, and its height does
/// not depend on n. Requires n >= 1.
comp_tree canonical_computation(const stab_monoid& m, const sharp_expr& e, std::uint64_t n);

/// Least set containing `from` and closed under product and sharp of
/// idempotents, with the strict part reached only through derivations that
/// apply at least one sharp. Witness expressions (over monoid elements)
/// record the first derivation found for each closure element.
struct closure_result {
  elem_set closure = 0;
  elem_set strict = 0;
  std::vector<std::optional<sharp_expr>> witness;
};

closure_result sharp_closure(const stab_monoid& m, elem_set from);

}  // namespace costfn

#endif  // COSTFN_SHARPEXPR_HPP
