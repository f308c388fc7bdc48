// Recognisers of cost functions and the decision procedures built on the
// sharp-closure: domination, boundedness, divergence, min/max.

#ifndef COSTFN_RECOGNISER_HPP
#define COSTFN_RECOGNISER_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costfn/monoid.hpp"
#include "costfn/sharpexpr.hpp"

namespace costfn {

/// A cost function presented as a stabilisation monoid, a letter-to-element
/// map and a downward closed ideal of target values.
struct recogniser {
  stab_monoid monoid;
  std::vector<std::string> alphabet;
  std::vector<elem> h;
  elem_set ideal = 0;
};

/// Throws structural_error unless h covers the alphabet with in-range
/// elements and the ideal is downward closed.
void check_recogniser(const recogniser& r);

/// Index of a letter in the alphabet, or io_error if absent.
std::size_t letter_index(const recogniser& r, std::string_view letter);

/// Image of a word under h.
std::vector<elem> h_image(const recogniser& r, std::span<const unsigned> u);

/// Outcome of a decision procedure. When the property fails, the witness
/// is an expression over alphabet indices whose unfoldings separate the two
/// sides.
struct decision {
  bool holds = false;
  std::optional<sharp_expr> witness;
};

/// Both functions rebuilt over one product monoid and one letter map, with
/// each ideal pulled back from its component.
struct joint_result {
  stab_monoid monoid;
  std::vector<std::string> alphabet;
  std::vector<elem> h;
  elem_set ideal_f = 0;
  elem_set ideal_g = 0;
};

joint_result joint(const recogniser& f, const recogniser& g);

/// Whether f is dominated by g: every sequence on which f is unbounded
/// makes g unbounded as well. Decided by the closure criterion on the
/// joint recogniser.
decision decide_domination(const recogniser& f, const recogniser& g);

decision decide_boundedness(const recogniser& f);

decision decide_divergence(const recogniser& f);

/// Whether f is bounded over the language of the characteristic recogniser
/// chi. Rejects a second argument whose monoid is not a lifted language
/// recogniser (trivial order, identity sharp).
decision decide_bounded_over(const recogniser& f, const recogniser& chi);

recogniser min_rec(const recogniser& f, const recogniser& g);
recogniser max_rec(const recogniser& f, const recogniser& g);

/// Recogniser of f composed with a letter renaming: new alphabet, each new
/// letter standing for the old letter at the given index.
recogniser precompose(const recogniser& f, std::vector<std::string> alphabet,
           std::span<const unsigned> to_old);

/// The three-element monoid that counts occurrences of its letter a:
/// b below a, a stabilising to the absorbing 0.
stab_monoid counting_monoid();

/// The word-length cost function over the given alphabet.
recogniser size_recogniser(std::vector<std::string> alphabet);

/// Shrinks the monoid to the sub-monoid generated by the letter images and
/// the unit. Recognises the same cost function.
recogniser restrict_to_generated(const recogniser& f);

}  // namespace costfn

#endif  // COSTFN_RECOGNISER_HPP
