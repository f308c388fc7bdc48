// Powerset stabilisation monoids over ideals and co-ideals of a base
// monoid, and the inf-/sup-projection of recognisers along a letter map.

#ifndef COSTFN_PROJECTION_HPP
#define COSTFN_PROJECTION_HPP

#include <span>
#include <string>
#include <vector>

#include "costfn/monoid.hpp"
#include "costfn/recogniser.hpp"

namespace costfn {

enum class powerset_kind { ideal, coideal };

/// A monoid whose elements are closed subsets of a base monoid, in
/// canonical ascending-mask order. For ideals the order is inclusion, the
/// product closes pairwise products downward and sharp is the strict
/// closure; for co-ideals everything is dualised.
struct powerset_monoid {
  powerset_kind kind = powerset_kind::ideal;
  std::vector<elem_set> members;
  stab_monoid monoid;
};

/// All downward-closed subsets of m as a stabilisation monoid. Throws
/// cap_error when there are more than 64 of them.
powerset_monoid ideal_powerset(const stab_monoid& m);

/// All upward-closed subsets, with reversed inclusion as the order.
powerset_monoid coideal_powerset(const stab_monoid& m);

/// Whether a projection builds the full powerset or only the part
/// reachable from the letter images, which recognises the same cost
/// function and stays small.
enum class powerset_scope { full, reachable };

/// Recogniser of the pointwise minimum of f over the preimages of the
/// letter map z (z[old letter] = new letter index).
recogniser inf_project(const recogniser& f, std::vector<std::string> alphabet,
                       std::span<const unsigned> z,
                       powerset_scope scope = powerset_scope::full);

/// Recogniser of the pointwise supremum of f over the preimages of z.
recogniser sup_project(const recogniser& f, std::vector<std::string> alphabet,
                       std::span<const unsigned> z,
                       powerset_scope scope = powerset_scope::full);

}  // namespace costfn

#endif  // COSTFN_PROJECTION_HPP
