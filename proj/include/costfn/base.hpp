// Basic types shared by the whole library: element ids, element sets as
// 64-bit masks, and the exception hierarchy.

#ifndef COSTFN_BASE_HPP
#define COSTFN_BASE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace costfn {

/// Index of an element inside one monoid. Stable only within that monoid.
using elem = unsigned;

/// A set of elements, one bit per element. The carrier is capped at 64
/// elements so every subset fits a machine word.
using elem_set = std::uint64_t;

inline constexpr unsigned max_elements = 64;
inline constexpr elem no_elem = 0xffffffffu;

/// Value standing for an infinite cost.
inline constexpr std::uint64_t infinite = ~std::uint64_t{0};

inline constexpr elem_set bit(elem x) { return elem_set{1} << x; }
inline constexpr bool has(elem_set s, elem x) { return (s >> x) & 1u; }
inline constexpr elem_set full_set(unsigned m) {
  return m >= 64 ? ~elem_set{0} : (elem_set{1} << m) - 1;
}
inline unsigned popcount(elem_set s) { return static_cast<unsigned>(std::popcount(s)); }

/// Iterate set bits low to high.
template <typename F>
void for_each_elem(elem_set s, F&& f) {
  while (s != 0) {
    f(static_cast<elem>(std::countr_zero(s)));
    s &= s - 1;
  }
}

inline elem lowest(elem_set s) { return static_cast<elem>(std::countr_zero(s)); }

struct costfn_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed shapes (table dimensions, index ranges). Distinct from axiom
/// violations, which are reported by the validator instead of thrown.
struct structural_error : costfn_error {
  using costfn_error::costfn_error;
};

/// Carrier or powerset output would exceed the 64-element cap.
struct cap_error : costfn_error {
  using costfn_error::costfn_error;
};

/// Input exceeds a brute-force/oracle limit.
struct scope_error : costfn_error {
  using costfn_error::costfn_error;
};

/// Text format problems when loading monoid/recogniser/formula files.
struct io_error : costfn_error {
  using costfn_error::costfn_error;
};

}  // namespace costfn

#endif  // COSTFN_BASE_HPP
