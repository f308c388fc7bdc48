#include "costfn/green.hpp"

#include <numeric>

namespace costfn {

namespace {

// {x.b.y : x, y in M}, computed as a two-sided reachability closure.
elem_set two_sided_ideal(const stab_monoid& m, elem b) {
  elem_set reach = bit(b);
  bool grew = true;
  while (grew) {
    grew = false;
    elem_set next = reach;
    for_each_elem(reach, [&](elem r) {
      for (elem x = 0; x < m.size(); ++x) {
        next |= bit(m.product(x, r));
        next |= bit(m.product(r, x));
      }
    });
    if (next != reach) {
      reach = next;
      grew = true;
    }
  }
  return reach;
}

}  // namespace

j_analysis analyze_j(const stab_monoid& m) {
  const unsigned n = m.size();
  j_analysis out;
  out.below.resize(n);
  for (elem b = 0; b < n; ++b) out.below[b] = two_sided_ideal(m, b);
  out.class_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (elem a = 0; a < n; ++a) {
    if (seen[a]) continue;
    elem_set cls = 0;
    for (elem b = 0; b < n; ++b)
      if (has(out.below[b], a) && has(out.below[a], b)) cls |= bit(b);
    unsigned idx = static_cast<unsigned>(out.classes.size());
    out.classes.push_back(cls);
    for_each_elem(cls, [&](elem b) {
      out.class_of[b] = idx;
      seen[b] = true;
    });
  }
  out.regular.resize(out.classes.size());
  out.stable.resize(out.classes.size());
  out.sharp_class.assign(out.classes.size(), 0);
  elem_set idem = m.idempotent_set();
  for (unsigned c = 0; c < out.classes.size(); ++c) {
    elem_set e_in = out.classes[c] & idem;
    out.regular[c] = e_in != 0;
    if (e_in != 0) {
      elem e = lowest(e_in);
      out.sharp_class[c] = out.class_of[m.sharp(e)];
      out.stable[c] = out.sharp_class[c] == c;
    } else {
      out.sharp_class[c] = c;
      out.stable[c] = true;
    }
  }
  return out;
}

omega_data compute_omega(const stab_monoid& m) {
  omega_data out;
  out.omega_power.resize(m.size());
  out.omega_sharp.resize(m.size());
  std::vector<unsigned> exponent(m.size());
  for (elem a = 0; a < m.size(); ++a) {
    elem p = a;
    unsigned k = 1;
    while (!m.is_idempotent(p)) {
      if (k > m.size() * m.size())
        throw structural_error("no idempotent power; product table is not associative");
      p = m.product(p, a);
      ++k;
    }
    exponent[a] = k;
    out.omega_power[a] = p;
    out.omega_sharp[a] = m.sharp(p);
  }
  out.omega = 1;
  for (unsigned k : exponent) out.omega = std::lcm(out.omega, k);
  return out;
}

bool is_j_smooth(const stab_monoid& m, const j_analysis& j, std::span<const elem> word,
                 unsigned j_class) {
  if (word.empty()) throw structural_error("smoothness is about non-empty words");
  for (elem a : word)
    if (j.class_of[a] != j_class) return false;
  return j.class_of[m.pi(word)] == j_class;
}

}  // namespace costfn
