// Cost monadic logic over finite words: the formula AST, brute-force
// semantics, atom automata, transition monoids, and compilation down to
// recognisers through the powerset projections.

#ifndef COSTFN_COSTMSO_HPP
#define COSTFN_COSTMSO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costfn/monoid.hpp"
#include "costfn/recogniser.hpp"

namespace costfn {

enum class formula_kind { letter_at, le, subset, card_le, f_and, f_or, exists, forall };

/// Formula of cost monadic logic in negation normal form. Negation is
/// carried as a flag on atoms and never on the cardinality bound, which
/// must stay positive.
struct cost_formula {
  formula_kind kind = formula_kind::letter_at;
  bool negated = false;
  std::string letter;
  std::string var;
  std::string var2;
  std::vector<cost_formula> subs;
};

cost_formula parse_formula(std::string_view text);
std::string print_formula(const cost_formula& f);

/// Free variables, sorted by name.
std::vector<std::string> free_vars(const cost_formula& f);

/// Alphabet of pairs (base letter, one bit per variable). Symbol ids pack
/// the variable bits into the low bits, in variable order.
struct extended_alphabet {
  std::vector<std::string> base;
  std::vector<std::string> vars;

  std::size_t symbol_count() const { return base.size() << vars.size(); }
  unsigned symbol(unsigned base_index, unsigned bits) const {
    return static_cast<unsigned>((base_index << vars.size()) | bits);
  }
  unsigned base_of(unsigned sym) const { return sym >> vars.size(); }
  unsigned bits_of(unsigned sym) const {
    return sym & ((1u << vars.size()) - 1u);
  }
  std::size_t var_position(std::string_view name) const;
  bool var_bit(unsigned sym, std::size_t var_pos) const {
    return ((sym >> var_pos) & 1u) != 0;
  }
  std::vector<std::string> names() const;
};

extended_alphabet make_extended(std::vector<std::string> base, std::vector<std::string> vars);

inline constexpr std::size_t evaluate_word_limit = 8;

/// Brute-force semantics. The valuation maps each free variable to a set
/// of 0-based word positions. Atoms are worth 0 when satisfied and
/// infinite otherwise, the cardinality atom is worth the set's size,
/// conjunction takes the maximum, disjunction the minimum, and the
/// quantifiers range over all position sets.
std::uint64_t evaluate(const cost_formula& f, std::span<const unsigned> u,
                       const std::map<std::string, std::uint64_t>& valuation,
                       std::span<const std::string> base,
                       std::size_t limit = evaluate_word_limit);

/// Deterministic complete automaton over an extended alphabet.
struct dfa {
  unsigned states = 1;
  unsigned initial = 0;
  std::vector<char> accepting;
  std::vector<unsigned> next;

  unsigned step(unsigned state, unsigned sym, std::size_t symbols) const {
    return next[state * symbols + sym];
  }
};

/// Automaton of one atom: a position in X carrying the letter, the order
/// of two singletons, or containment of sets. Negated atoms complement
/// the accepting states.
dfa atom_dfa(const cost_formula& atom, const extended_alphabet& ext);

/// The monoid of state transformations of a complete automaton, with the
/// trivial order and the identity stabilisation. The word uv acts as u
/// followed by v.
struct dfa_monoid {
  stab_monoid monoid;
  std::vector<elem> h;
  elem_set accepting = 0;
};

dfa_monoid transition_monoid(const dfa& d, std::size_t symbols);

/// Recogniser of the characteristic function of the automaton's language:
/// 0 on the language and infinite outside, so the ideal collects the
/// non-accepting transformations.
recogniser char_recogniser(const dfa& d, const extended_alphabet& ext);

/// Recogniser of the number of positions whose bit for the given variable
/// is set.
recogniser size_recogniser(const extended_alphabet& ext, const std::string& var);

/// Compiles a formula to a recogniser over the extended alphabet of its
/// free variables, aligning subformulas by bit erasure and projecting
/// quantifiers through the reachable powersets.
recogniser compile(const cost_formula& f, const std::vector<std::string>& base);

enum class logic_task { bounded, diverges, dominates };

/// Decision procedures for closed formulas; dominates takes the second
/// formula as the right-hand side.
decision decide_formula(logic_task task, const cost_formula& f, const cost_formula* g,
                        const std::vector<std::string>& base);

}  // namespace costfn

#endif  // COSTFN_COSTMSO_HPP
