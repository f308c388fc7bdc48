// Stabilisation monoids: finite ordered monoids with a stabilisation map
// defined on idempotents, plus validation, morphisms and products.

#ifndef COSTFN_MONOID_HPP
#define COSTFN_MONOID_HPP

#include <span>
#include <string>
#include <vector>

#include "costfn/base.hpp"

namespace costfn {

/// One broken axiom, identified by name plus the witnessing elements.
enum class axiom {
  associativity,        // (a.b).c != a.(b.c)
  unit_neutral,         // 1.a != a or a.1 != a
  order_reflexive,      // not a <= a
  order_antisymmetric,  // a <= b, b <= a, a != b
  order_transitive,     // a <= b <= c but not a <= c
  product_monotone,     // a <= a', b <= b', not a.b <= a'.b'
  sharp_missing,        // idempotent without a sharp image
  sharp_extra,          // sharp defined on a non-idempotent
  sharp_monotone,       // e <= f but not e# <= f#
  sharp_consistency,    // a.b, b.a idempotent but (a.b)# != a.(b.a)#.b
  sharp_decreasing,     // not e# <= e
  sharp_idempotent,     // e#.e# != e#
  sharp_fixpoint,       // (e#)# != e#
  sharp_unit,           // 1# != 1
};

const char* axiom_id(axiom a);    // short stable identifier, e.g. "sharp-decreasing"
std::string axiom_text(axiom a);  // human form, e.g. "sharp(e) <= e"

struct violation {
  axiom which;
  std::vector<elem> witness;
};

std::string describe(const violation& v, const class stab_monoid& m);

/// Finite ordered monoid with stabilisation. Construction only checks
/// shapes (structural errors); semantic axioms are the validator's business,
/// so invalid candidates can be represented and inspected.
class stab_monoid {
 public:
  /// The one-element monoid.
  stab_monoid() : stab_monoid({"1"}, 0, {0}, {bit(0)}, {0}) {}

  /// `table` is row-major m*m, `sharp` uses no_elem for "undefined",
  /// `leq_rows[a]` is the mask of b with a <= b. Throws structural_error on
  /// shape problems and cap_error past 64 elements.
  stab_monoid(std::vector<std::string> names, elem unit, std::vector<elem> table,
              std::vector<elem_set> leq_rows, std::vector<elem> sharp);

  unsigned size() const { return size_; }
  elem unit() const { return unit_; }
  const std::string& name(elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  elem product(elem a, elem b) const { return table_[a * size_ + b]; }
  bool leq(elem a, elem b) const { return has(up_[a], b); }
  elem_set up_set(elem a) const { return up_[a]; }  // {b : a <= b}
  elem_set dn_set(elem a) const { return dn_[a]; }  // {b : b <= a}

  bool is_idempotent(elem a) const { return product(a, a) == a; }
  bool sharp_defined(elem a) const { return sharp_[a] != no_elem; }
  elem sharp(elem a) const;

  elem pi(std::span<const elem> word) const;  // product of a word, unit if empty
  elem_set idempotent_set() const;

  elem_set down_closure(elem_set s) const;
  elem_set up_closure(elem_set s) const;
  bool is_downward_closed(elem_set s) const { return down_closure(s) == s; }
  bool is_upward_closed(elem_set s) const { return up_closure(s) == s; }

  /// Element index by name; no_elem when absent.
  elem find(const std::string& name) const;

 private:
  unsigned size_;
  std::vector<std::string> names_;
  elem unit_;
  std::vector<elem> table_;
  std::vector<elem_set> up_, dn_;
  std::vector<elem> sharp_;
};

/// Downward (resp. upward) closed subsets, used for recogniser ideals and
/// the powerset constructions. Thin wrappers so signatures say what they mean.
struct ideal {
  elem_set members = 0;
};
struct coideal {
  elem_set members = 0;
};

/// Checks every stabilisation monoid axiom and reports each failure with a
/// witness. Empty report iff the candidate is a stabilisation monoid.
std::vector<violation> validate_axioms(const stab_monoid& m);

/// Lift a plain finite monoid: trivial order (equality) and identity sharp
/// on idempotents. Always a valid stabilisation monoid.
stab_monoid lift_monoid(std::vector<std::string> names, elem unit, std::vector<elem> table);

/// Componentwise product monoid. Element (x, y) gets index x * |B| + y.
stab_monoid product_monoid(const stab_monoid& a, const stab_monoid& b);

/// Restriction to a sub-stabilisation monoid: `keep` must contain the unit
/// and be closed under product and sharp (checked, structural_error if not).
/// Returns the restricted monoid plus the map old id -> new id.
struct submonoid_result {
  stab_monoid monoid;
  std::vector<elem> remap;  // size of the original carrier, no_elem for dropped
};
submonoid_result restrict_monoid(const stab_monoid& m, elem_set keep);

/// Closure of `seed` (plus the unit) under product and sharp-of-idempotents.
elem_set generated_closure(const stab_monoid& m, elem_set seed);

/// Monoid morphism: map from src's carrier into tgt's.
struct morphism {
  const stab_monoid* src = nullptr;
  const stab_monoid* tgt = nullptr;
  std::vector<elem> map;
};

/// A morphism must preserve unit, product, order, and sharp. Violations are
/// reported in the same shape as validate_axioms (witnesses are src elements).
enum class morphism_law { unit, product, order, sharp };
struct morphism_violation {
  morphism_law which;
  std::vector<elem> witness;
};
std::vector<morphism_violation> check_morphism(const morphism& mu);

/// Preimage of a downward closed set under a morphism; downward closed again.
ideal pullback_ideal(const morphism& mu, ideal target);

}  // namespace costfn

#endif  // COSTFN_MONOID_HPP
