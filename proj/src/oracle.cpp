#include "costfn/oracle.hpp"

#include <vector>

namespace costfn {

namespace {

elem_set rel_closure(const stab_monoid& m, mode md, elem v) {
  switch (md) {
    case mode::exact: return bit(v);
    case mode::under: return m.dn_set(v);
    case mode::over: return m.up_set(v);
  }
  return 0;
}

}  // namespace

elem_set achievable_values(const stab_monoid& m, std::span<const elem> w, std::uint64_t n,
             unsigned p, mode md, std::size_t limit) {
  if (w.empty()) throw structural_error("computations need a nonempty word");
  if (w.size() > limit)
    throw scope_error("word of length " + std::to_string(w.size()) +
             " exceeds the oracle limit of " + std::to_string(limit));
  for (elem x : w)
    if (x >= m.size()) throw structural_error("word letter outside the monoid");

  const std::size_t len = w.size();
  const std::size_t cells = (len + 1) * (len + 1);
  auto at = [len](std::size_t i, std::size_t j) { return i * (len + 1) + j; };

  std::vector<elem_set> prev(cells, 0);
  for (std::size_t i = 0; i < len; ++i) prev[at(i, i + 1)] = rel_closure(m, md, w[i]);
  if (p == 0) return prev[at(0, len)];

  std::vector<std::uint32_t> counts(len + 1);
  std::vector<elem_set> cur;
  for (unsigned h = 1; h <= p; ++h) {
    cur = prev;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 2; j <= len; ++j) {
        elem_set gained = 0;
        for (std::size_t s = i + 1; s < j; ++s) {
          for_each_elem(prev[at(i, s)], [&](elem v1) {
            for_each_elem(prev[at(s, j)], [&](elem v2) {
              gained |= rel_closure(m, md, m.product(v1, v2));
            });
          });
        }
        cur[at(i, j)] |= gained;
      }
    }
    for_each_elem(m.idempotent_set(), [&](elem e) {
      const elem_set target_idem = rel_closure(m, md, e);
      const elem_set target_stab =
        m.sharp_defined(e) ? rel_closure(m, md, m.sharp(e)) : 0;
      for (std::size_t i = 0; i < len; ++i) {
        counts.assign(len + 1, 0);
        counts[i] = 1;
        for (std::size_t j = i + 1; j <= len; ++j) {
          std::uint32_t reach = 0;
          for (std::size_t s = i; s < j; ++s)
            if (counts[s] != 0 && has(prev[at(s, j)], e)) reach |= counts[s] << 1;
          counts[j] = reach;
          if (reach == 0) continue;
          bool idem_split = false;
          bool stab_split = false;
          for (std::size_t k = 2; k <= j - i; ++k) {
            if ((reach >> k) & 1u) {
              if (k <= n) idem_split = true;
              if (k > n) stab_split = true;
            }
          }
          if ((reach >> 1) & 1u)
            if (1 > n) stab_split = true;
          if (idem_split) cur[at(i, j)] |= target_idem;
          if (stab_split) cur[at(i, j)] |= target_stab;
        }
      }
    });
    if (cur == prev) break;
    prev = cur;
  }
  return prev[at(0, len)];
}

std::uint64_t semantic_value(const recogniser& r, std::span<const unsigned> u, sem_variant v,
              unsigned p, std::size_t limit) {
  for (unsigned a : u)
    if (a >= r.alphabet.size()) throw structural_error("word letter outside the alphabet");
  if (u.empty()) return has(r.ideal, r.monoid.unit()) ? infinite : 0;

  std::vector<elem> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = r.h[u[i]];

  mode md = mode::exact;
  if (v == sem_variant::minus_minus) md = mode::under;
  if (v == sem_variant::plus_plus) md = mode::over;
  const bool inf_side = v == sem_variant::minus_minus || v == sem_variant::minus;
  const std::uint64_t sat = u.size();

  if (inf_side) {
    for (std::uint64_t n = 0; n <= sat; ++n) {
      const elem_set values = achievable_values(r.monoid, w, n, p, md, limit);
      if ((values & ~r.ideal) != 0) return n;
    }
    return infinite;
  }
  if ((achievable_values(r.monoid, w, sat, p, md, limit) & r.ideal) != 0) return infinite;
  for (std::uint64_t n = sat; n-- > 0;)
    if ((achievable_values(r.monoid, w, n, p, md, limit) & r.ideal) != 0) return n + 1;
  return 0;
}

}  // namespace costfn
