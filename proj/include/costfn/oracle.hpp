// Brute-force oracle over computation trees: the exact set of values
// reachable at a given threshold and height, and the four semantic
// functions defined from it.

#ifndef COSTFN_ORACLE_HPP
#define COSTFN_ORACLE_HPP

#include <cstdint>
#include <span>

#include "costfn/monoid.hpp"
#include "costfn/recogniser.hpp"
#include "costfn/tree.hpp"

namespace costfn {

inline constexpr std::size_t oracle_word_limit = 14;

/// Exactly the values of mode-computations with threshold n and height at
/// most p over w, by dynamic programming over word intervals and heights.
/// Words longer than the limit are rejected with scope_error.
elem_set achievable_values(const stab_monoid& m, std::span<const elem> w, std::uint64_t n,
             unsigned p, mode md, std::size_t limit = oracle_word_limit);

/// The four semantic functions: the inf side asks for the least threshold
/// whose computations can leave the ideal, the sup side for the greatest
/// threshold (plus one) whose computations can stay inside.
enum class sem_variant { minus_minus, minus, plus, plus_plus };

std::uint64_t semantic_value(const recogniser& r, std::span<const unsigned> u, sem_variant v,
              unsigned p, std::size_t limit = oracle_word_limit);

}  // namespace costfn

#endif  // COSTFN_ORACLE_HPP
