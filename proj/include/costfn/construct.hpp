// Existence of computations: every nonempty word admits an exact
// n-computation of height at most 3|M|, built by induction on two-sided
// ideals with Ramsey factorisations inside single J-classes as the base.

#ifndef COSTFN_CONSTRUCT_HPP
#define COSTFN_CONSTRUCT_HPP

#include <cstdint>
#include <span>

#include "costfn/green.hpp"
#include "costfn/monoid.hpp"
#include "costfn/tree.hpp"

namespace costfn {

/// A Ramsey factorisation of a J-smooth word: an exact computation with no
/// stabilisation nodes and idempotent nodes of arbitrary degree, of
/// minimal height (always at most 3|J| - 1). Non-smooth input is rejected.
comp_tree ramsey_factorise_smooth(const stab_monoid& m, const j_analysis& j, unsigned j_class,
                                  std::span<const elem> w);

/// An exact n-computation for w of height at most 3|M|.
comp_tree construct(const stab_monoid& m, std::span<const elem> w, std::uint64_t n);

}  // namespace costfn

#endif  // COSTFN_CONSTRUCT_HPP
