#include "costfn/recogniser.hpp"

#include <algorithm>

namespace costfn {

void check_recogniser(const recogniser& r) {
  if (r.alphabet.empty()) throw structural_error("recogniser needs a nonempty alphabet");
  if (r.h.size() != r.alphabet.size())
    throw structural_error("letter map does not cover the alphabet");
  for (elem x : r.h)
    if (x >= r.monoid.size()) throw structural_error("letter maps outside the monoid");
  if ((r.ideal & ~full_set(r.monoid.size())) != 0)
    throw structural_error("ideal contains elements outside the monoid");
  if (!r.monoid.is_downward_closed(r.ideal))
    throw structural_error("ideal is not downward closed");
  for (std::size_t i = 0; i < r.alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < r.alphabet.size(); ++j)
      if (r.alphabet[i] == r.alphabet[j])
        throw structural_error("alphabet letter '" + r.alphabet[i] + "' repeats");
}

std::size_t letter_index(const recogniser& r, std::string_view letter) {
  for (std::size_t i = 0; i < r.alphabet.size(); ++i)
    if (r.alphabet[i] == letter) return i;
  throw io_error("letter '" + std::string(letter) + "' is not in the alphabet");
}

std::vector<elem> h_image(const recogniser& r, std::span<const unsigned> u) {
  std::vector<elem> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= r.h.size()) throw structural_error("word letter outside the alphabet");
    w[i] = r.h[u[i]];
  }
  return w;
}

joint_result joint(const recogniser& f, const recogniser& g) {
  if (f.alphabet != g.alphabet)
    throw structural_error("the recognisers use different alphabets");
  stab_monoid prod = product_monoid(f.monoid, g.monoid);
  const std::size_t nb = g.monoid.size();
  std::vector<elem> h(f.alphabet.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = static_cast<elem>(f.h[i] * nb + g.h[i]);
  elem_set ideal_f = 0;
  elem_set ideal_g = 0;
  for (elem x = 0; x < f.monoid.size(); ++x) {
    for (elem y = 0; y < nb; ++y) {
      const elem pair = static_cast<elem>(x * nb + y);
      if (has(f.ideal, x)) ideal_f |= bit(pair);
      if (has(g.ideal, y)) ideal_g |= bit(pair);
    }
  }
  return joint_result{std::move(prod), f.alphabet, std::move(h), ideal_f, ideal_g};
}

namespace {

/// Turns a closure witness over monoid elements into an expression over the
/// alphabet, replacing each element by its lowest-index preimage letter.
sharp_expr witness_over_alphabet(const sharp_expr& e, const std::vector<elem>& h,
                std::size_t letters) {
  std::vector<unsigned> preimage(max_elements, 0);
  for (std::size_t i = letters; i-- > 0;) preimage[h[i]] = static_cast<unsigned>(i);
  return map_letters(e, preimage);
}

decision closure_inclusion(const stab_monoid& m, const std::vector<elem>& h,
             std::size_t letters, elem_set inside, elem_set target) {
  elem_set image = 0;
  for (std::size_t i = 0; i < letters; ++i) image |= bit(h[i]);
  const closure_result closed = sharp_closure(m, image);
  const elem_set violating = closed.closure & inside & ~target;
  if (violating == 0) return decision{true, std::nullopt};
  const elem culprit = lowest(violating);
  return decision{false, witness_over_alphabet(*closed.witness[culprit], h, letters)};
}

}  // namespace

decision decide_domination(const recogniser& f, const recogniser& g) {
  const joint_result j = joint(f, g);
  return closure_inclusion(j.monoid, j.h, j.alphabet.size(), j.ideal_f, j.ideal_g);
}

decision decide_boundedness(const recogniser& f) {
  return closure_inclusion(f.monoid, f.h, f.alphabet.size(), f.ideal, 0);
}

decision decide_divergence(const recogniser& f) {
  return decide_domination(size_recogniser(f.alphabet), f);
}

decision decide_bounded_over(const recogniser& f, const recogniser& chi) {
  const stab_monoid& m = chi.monoid;
  for (elem x = 0; x < m.size(); ++x) {
    if (m.up_set(x) != bit(x))
      throw structural_error("second argument is not characteristic: order is not trivial");
    if (m.sharp_defined(x) && m.sharp(x) != x)
      throw structural_error("second argument is not characteristic: sharp moves " +
                 m.name(x));
  }
  return decide_domination(f, chi);
}

namespace {

recogniser combine(const recogniser& f, const recogniser& g, bool intersect) {
  joint_result j = joint(f, g);
  const elem_set ideal = intersect ? (j.ideal_f & j.ideal_g) : (j.ideal_f | j.ideal_g);
  return recogniser{std::move(j.monoid), std::move(j.alphabet), std::move(j.h), ideal};
}

}  // namespace

recogniser min_rec(const recogniser& f, const recogniser& g) { return combine(f, g, true); }

recogniser max_rec(const recogniser& f, const recogniser& g) { return combine(f, g, false); }

recogniser precompose(const recogniser& f, std::vector<std::string> alphabet,
           std::span<const unsigned> to_old) {
  if (alphabet.size() != to_old.size())
    throw structural_error("letter renaming does not cover the new alphabet");
  std::vector<elem> h(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (to_old[i] >= f.h.size())
      throw structural_error("letter renaming points outside the old alphabet");
    h[i] = f.h[to_old[i]];
  }
  return recogniser{f.monoid, std::move(alphabet), std::move(h), f.ideal};
}

stab_monoid counting_monoid() {
  const std::vector<std::string> names{"b", "a", "0"};
  const std::vector<elem> table{0, 1, 2, 1, 1, 2, 2, 2, 2};
  const std::vector<elem_set> leq{bit(0), bit(1), bit(1) | bit(2)};
  const std::vector<elem> sharp{0, 2, 2};
  return stab_monoid(names, 0, table, leq, sharp);
}

recogniser size_recogniser(std::vector<std::string> alphabet) {
  std::vector<elem> h(alphabet.size(), 1);
  return recogniser{counting_monoid(), std::move(alphabet), std::move(h), bit(2)};
}

recogniser restrict_to_generated(const recogniser& f) {
  elem_set seed = bit(f.monoid.unit());
  for (elem x : f.h) seed |= bit(x);
  const elem_set reachable = generated_closure(f.monoid, seed);
  submonoid_result sub = restrict_monoid(f.monoid, reachable);
  std::vector<elem> h(f.h.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = sub.remap[f.h[i]];
  elem_set ideal = 0;
  for_each_elem(f.ideal & reachable, [&](elem x) { ideal |= bit(sub.remap[x]); });
  return recogniser{std::move(sub.monoid), f.alphabet, std::move(h), ideal};
}

}  // namespace costfn
