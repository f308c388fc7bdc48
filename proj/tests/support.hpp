// Shared fixtures for the test suites: the two worked monoids, their
// recognisers, direct cost functions, word enumeration, deterministic
// randomness, and the independent tree-enumeration oracle.

#ifndef COSTFN_TESTS_SUPPORT_HPP
#define COSTFN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "costfn/monoid.hpp"
#include "costfn/recogniser.hpp"
#include "costfn/tree.hpp"

namespace costfn::test {

// counta elements: b=0, a=1, 0=2. sega elements: 1=0, a=1, b=2, 0=3.
stab_monoid counta();
stab_monoid sega();

// Recognisers over the alphabet {a, b} with letter indices a=0, b=1.
recogniser counta_a_rec();
recogniser counta_b_rec();
recogniser sega_rec();

/// Number of occurrences of the given letter index.
std::uint64_t direct_count(std::span<const unsigned> u, unsigned letter);

/// Calls f on every word over the given number of letters up to max_len,
/// including the empty word, in length-then-lexicographic order.
template <typename F>
void for_all_words(unsigned letters, std::size_t max_len, F&& f) {
  std::vector<unsigned> w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      f(std::span<const unsigned>(w));
      std::size_t i = 0;
      while (i < len && ++w[i] == letters) {
        w[i] = 0;
        ++i;
      }
      if (i == len) break;
    }
  }
}

/// Fixed-seed generator so failures reproduce.
std::mt19937& rng();

/// Valid monoids of size at most 6 with varied order and sharp structure.
const std::vector<stab_monoid>& fuzz_pool();

std::vector<elem> random_word(const stab_monoid& m, std::size_t len, std::mt19937& gen);

/// Every exact computation tree over w materialised up to the height
/// bound, each checked by the validator.
struct enumeration {
  elem_set values = 0;
  std::size_t trees = 0;
  std::size_t defects = 0;
};
enumeration enumerate_exact(const stab_monoid& m, std::span<const elem> w, std::uint64_t n,
                            unsigned height);

/// Random under- or over-computation built by relaxing node values of a
/// valid exact computation along its binary spine.
comp_tree relax_computation(const stab_monoid& m, const comp_tree& exact, mode md,
                            std::mt19937& gen);

}  // namespace costfn::test

#endif  // COSTFN_TESTS_SUPPORT_HPP
