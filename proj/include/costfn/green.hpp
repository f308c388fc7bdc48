// Green's J-relation restricted to what the computation construction needs:
// J-classes, their regularity and stability, and idempotent power data.

#ifndef COSTFN_GREEN_HPP
#define COSTFN_GREEN_HPP

#include <span>
#include <vector>

#include "costfn/base.hpp"
#include "costfn/monoid.hpp"

namespace costfn {

/// J-class decomposition. a <=J b iff a = x.b.y for some x, y (monoid, so
/// x or y may be the unit). Classes are numbered by their smallest member.
struct j_analysis {
  std::vector<unsigned> class_of;        // element -> class index
  std::vector<elem_set> classes;         // class index -> members
  std::vector<bool> regular;             // contains an idempotent
  std::vector<bool> stable;              // regular and e# stays in the class
  std::vector<unsigned> sharp_class;     // regular: class of e# (same for all e)
  std::vector<elem_set> below;           // below[x] = {y : y <=J x}
  bool leq_j(elem a, elem b) const { return has(below[b], a); }
};

j_analysis analyze_j(const stab_monoid& m);

/// Idempotent power data: omega is the least number with a^omega idempotent
/// for every a (the lcm of the per-element exponents), omega_power(a) is
/// that idempotent, omega_sharp(a) its stabilisation.
struct omega_data {
  unsigned omega = 1;
  std::vector<elem> omega_power;
  std::vector<elem> omega_sharp;
};

omega_data compute_omega(const stab_monoid& m);

/// A word is J-smooth for class J when every letter lies in J and the
/// product of the whole word stays in J (equivalently every infix does).
/// Empty words are rejected.
bool is_j_smooth(const stab_monoid& m, const j_analysis& j, std::span<const elem> word,
                 unsigned j_class);

}  // namespace costfn

#endif  // COSTFN_GREEN_HPP
