#include "costfn/projection.hpp"

#include <map>
#include <set>

#include "costfn/sharpexpr.hpp"

namespace costfn {

namespace {

elem_set close(const stab_monoid& m, powerset_kind k, elem_set s) {
  return k == powerset_kind::ideal ? m.down_closure(s) : m.up_closure(s);
}

elem_set mask_product(const stab_monoid& m, powerset_kind k, elem_set a, elem_set b) {
  elem_set prods = 0;
  for_each_elem(a, [&](elem x) {
    for_each_elem(b, [&](elem y) { prods |= bit(m.product(x, y)); });
  });
  return close(m, k, prods);
}

elem_set mask_sharp(const stab_monoid& m, powerset_kind k, elem_set e) {
  return close(m, k, sharp_closure(m, e).strict);
}

std::string subset_name(const stab_monoid& m, elem_set s) {
  std::string out = "{";
  bool first = true;
  for_each_elem(s, [&](elem x) {
    if (!first) out += '.';
    out += m.name(x);
    first = false;
  });
  return out + "}";
}

powerset_monoid assemble(const stab_monoid& m, powerset_kind k, std::set<elem_set> found) {
  std::vector<elem_set> members(found.begin(), found.end());
  std::map<elem_set, elem> index;
  for (elem i = 0; i < members.size(); ++i) index[members[i]] = i;
  const std::size_t n = members.size();

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = subset_name(m, members[i]);

  std::vector<elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = index.at(mask_product(m, k, members[i], members[j]));

  std::vector<elem_set> leq(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool below = k == powerset_kind::ideal
                             ? (members[i] & ~members[j]) == 0
                             : (members[j] & ~members[i]) == 0;
      if (below) leq[i] |= bit(static_cast<elem>(j));
    }
  }

  std::vector<elem> sharp(n, no_elem);
  for (std::size_t i = 0; i < n; ++i)
    if (table[i * n + i] == i) sharp[i] = index.at(mask_sharp(m, k, members[i]));

  const elem unit = index.at(close(m, k, bit(m.unit())));
  stab_monoid derived(std::move(names), unit, std::move(table), std::move(leq),
                      std::move(sharp));
  if (!validate_axioms(derived).empty())
    throw structural_error("internal: powerset construction broke the axioms");
  return powerset_monoid{k, std::move(members), std::move(derived)};
}

powerset_monoid full_powerset(const stab_monoid& m, powerset_kind k) {
  std::set<elem_set> found;
  std::vector<elem_set> queue;
  auto add = [&](elem_set s) {
    if (!found.insert(s).second) return;
    if (found.size() > max_elements)
      throw cap_error("powerset of the monoid needs more than 64 elements");
    queue.push_back(s);
  };
  add(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const elem_set cur = queue[i];
    for (elem x = 0; x < m.size(); ++x)
      if (!has(cur, x)) add(cur | close(m, k, bit(x)));
  }
  return assemble(m, k, std::move(found));
}

powerset_monoid reachable_powerset(const stab_monoid& m, powerset_kind k,
                                   const std::vector<elem_set>& seeds) {
  std::set<elem_set> found;
  std::vector<elem_set> queue;
  auto add = [&](elem_set s) {
    if (!found.insert(s).second) return;
    if (found.size() > max_elements)
      throw cap_error("reachable powerset needs more than 64 elements");
    queue.push_back(s);
  };
  add(close(m, k, bit(m.unit())));
  for (elem_set s : seeds) add(s);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const elem_set cur = queue[i];
    const std::vector<elem_set> snapshot(queue.begin(), queue.begin() + i + 1);
    for (elem_set other : snapshot) {
      add(mask_product(m, k, cur, other));
      add(mask_product(m, k, other, cur));
    }
    if (mask_product(m, k, cur, cur) == cur) add(mask_sharp(m, k, cur));
  }
  return assemble(m, k, std::move(found));
}

recogniser project(const recogniser& f, std::vector<std::string> alphabet,
                   std::span<const unsigned> z, powerset_scope scope, powerset_kind k) {
  if (z.size() != f.alphabet.size())
    throw structural_error("letter map does not cover the old alphabet");
  for (unsigned b : z)
    if (b >= alphabet.size())
      throw structural_error("letter map points outside the new alphabet");

  std::vector<elem_set> images(alphabet.size(), 0);
  for (std::size_t old = 0; old < z.size(); ++old) images[z[old]] |= bit(f.h[old]);
  for (elem_set& s : images) s = close(f.monoid, k, s);

  powerset_monoid pw = scope == powerset_scope::full
                           ? full_powerset(f.monoid, k)
                           : reachable_powerset(f.monoid, k, images);

  std::vector<elem> h(alphabet.size());
  for (std::size_t b = 0; b < alphabet.size(); ++b) {
    bool placed = false;
    for (elem i = 0; i < pw.members.size() && !placed; ++i) {
      if (pw.members[i] == images[b]) {
        h[b] = i;
        placed = true;
      }
    }
    if (!placed) throw structural_error("internal: letter image missing from the powerset");
  }

  elem_set ideal = 0;
  for (elem i = 0; i < pw.members.size(); ++i) {
    const bool in = k == powerset_kind::ideal ? (pw.members[i] & ~f.ideal) == 0
                                              : (pw.members[i] & f.ideal) != 0;
    if (in) ideal |= bit(i);
  }
  return recogniser{std::move(pw.monoid), std::move(alphabet), std::move(h), ideal};
}

}  // namespace

powerset_monoid ideal_powerset(const stab_monoid& m) {
  return full_powerset(m, powerset_kind::ideal);
}

powerset_monoid coideal_powerset(const stab_monoid& m) {
  return full_powerset(m, powerset_kind::coideal);
}

recogniser inf_project(const recogniser& f, std::vector<std::string> alphabet,
                       std::span<const unsigned> z, powerset_scope scope) {
  return project(f, std::move(alphabet), z, scope, powerset_kind::ideal);
}

recogniser sup_project(const recogniser& f, std::vector<std::string> alphabet,
                       std::span<const unsigned> z, powerset_scope scope) {
  return project(f, std::move(alphabet), z, scope, powerset_kind::coideal);
}

}  // namespace costfn
