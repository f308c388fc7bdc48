#include "costfn/monoid.hpp"

#include <algorithm>

namespace costfn {

const char* axiom_id(axiom a) {
  switch (a) {
    case axiom::associativity: return "associativity";
    case axiom::unit_neutral: return "unit-neutral";
    case axiom::order_reflexive: return "order-reflexive";
    case axiom::order_antisymmetric: return "order-antisymmetric";
    case axiom::order_transitive: return "order-transitive";
    case axiom::product_monotone: return "product-monotone";
    case axiom::sharp_missing: return "sharp-missing-on-idempotent";
    case axiom::sharp_extra: return "sharp-on-non-idempotent";
    case axiom::sharp_monotone: return "sharp-monotone";
    case axiom::sharp_consistency: return "sharp-consistency";
    case axiom::sharp_decreasing: return "sharp-decreasing";
    case axiom::sharp_idempotent: return "sharp-idempotent";
    case axiom::sharp_fixpoint: return "sharp-fixpoint";
    case axiom::sharp_unit: return "sharp-unit";
  }
  return "?";
}

std::string axiom_text(axiom a) {
  switch (a) {
    case axiom::associativity: return "(a.b).c = a.(b.c)";
    case axiom::unit_neutral: return "1.a = a = a.1";
    case axiom::order_reflexive: return "a <= a";
    case axiom::order_antisymmetric: return "a <= b and b <= a imply a = b";
    case axiom::order_transitive: return "a <= b <= c implies a <= c";
    case axiom::product_monotone: return "a <= a' and b <= b' imply a.b <= a'.b'";
    case axiom::sharp_missing: return "sharp is defined on every idempotent";
    case axiom::sharp_extra: return "sharp is defined only on idempotents";
    case axiom::sharp_monotone: return "e <= f implies e# <= f#";
    case axiom::sharp_consistency: return "(a.b)# = a.(b.a)#.b when a.b and b.a are idempotent";
    case axiom::sharp_decreasing: return "e# <= e";
    case axiom::sharp_idempotent: return "e#.e# = e#";
    case axiom::sharp_fixpoint: return "(e#)# = e#";
    case axiom::sharp_unit: return "1# = 1";
  }
  return "?";
}

std::string describe(const violation& v, const stab_monoid& m) {
  std::string out = axiom_id(v.which);
  out += " (";
  out += axiom_text(v.which);
  out += ")";
  if (!v.witness.empty()) {
    out += " at";
    for (elem x : v.witness) {
      out += ' ';
      out += m.name(x);
    }
  }
  return out;
}

stab_monoid::stab_monoid(std::vector<std::string> names, elem unit, std::vector<elem> table,
                         std::vector<elem_set> leq_rows, std::vector<elem> sharp)
    : size_(static_cast<unsigned>(names.size())),
      names_(std::move(names)),
      unit_(unit),
      table_(std::move(table)),
      sharp_(std::move(sharp)) {
  if (size_ == 0) throw structural_error("monoid needs at least the unit element");
  if (size_ > max_elements) throw cap_error("monoid exceeds the 64 element cap");
  if (unit_ >= size_) throw structural_error("unit is not an element");
  if (table_.size() != static_cast<std::size_t>(size_) * size_)
    throw structural_error("product table is not |M| x |M|");
  for (elem x : table_)
    if (x >= size_) throw structural_error("product table entry out of range");
  if (leq_rows.size() != size_) throw structural_error("order relation is not |M| rows");
  if (sharp_.size() != size_) throw structural_error("sharp map is not |M| entries");
  for (elem x : sharp_)
    if (x != no_elem && x >= size_) throw structural_error("sharp image out of range");
  elem_set carrier = full_set(size_);
  up_.assign(size_, 0);
  dn_.assign(size_, 0);
  for (elem a = 0; a < size_; ++a) {
    if ((leq_rows[a] & ~carrier) != 0) throw structural_error("order row mentions non-elements");
    up_[a] = leq_rows[a];
  }
  for (elem a = 0; a < size_; ++a)
    for_each_elem(up_[a], [&](elem b) { dn_[b] |= bit(a); });
}

elem stab_monoid::sharp(elem a) const {
  if (sharp_[a] == no_elem) throw structural_error("sharp undefined on " + names_[a]);
  return sharp_[a];
}

elem stab_monoid::pi(std::span<const elem> word) const {
  elem acc = unit_;
  for (elem x : word) acc = product(acc, x);
  return acc;
}

elem_set stab_monoid::idempotent_set() const {
  elem_set out = 0;
  for (elem a = 0; a < size_; ++a)
    if (is_idempotent(a)) out |= bit(a);
  return out;
}

elem_set stab_monoid::down_closure(elem_set s) const {
  elem_set out = 0;
  for_each_elem(s, [&](elem x) { out |= dn_[x]; });
  return out | s;
}

elem_set stab_monoid::up_closure(elem_set s) const {
  elem_set out = 0;
  for_each_elem(s, [&](elem x) { out |= up_[x]; });
  return out | s;
}

elem stab_monoid::find(const std::string& name) const {
  for (elem a = 0; a < size_; ++a)
    if (names_[a] == name) return a;
  return no_elem;
}

std::vector<violation> validate_axioms(const stab_monoid& m) {
  std::vector<violation> out;
  const unsigned n = m.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (m.product(m.product(a, b), c) != m.product(a, m.product(b, c)))
          out.push_back({axiom::associativity, {a, b, c}});
  for (elem a = 0; a < n; ++a)
    if (m.product(m.unit(), a) != a || m.product(a, m.unit()) != a)
      out.push_back({axiom::unit_neutral, {a}});
  for (elem a = 0; a < n; ++a)
    if (!m.leq(a, a)) out.push_back({axiom::order_reflexive, {a}});
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      if (a != b && m.leq(a, b) && m.leq(b, a))
        out.push_back({axiom::order_antisymmetric, {a, b}});
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      if (!m.leq(a, b)) continue;
      for (elem c = 0; c < n; ++c)
        if (m.leq(b, c) && !m.leq(a, c)) out.push_back({axiom::order_transitive, {a, b, c}});
    }
  for (elem a = 0; a < n; ++a)
    for (elem a2 = 0; a2 < n; ++a2) {
      if (!m.leq(a, a2)) continue;
      for (elem b = 0; b < n; ++b)
        for (elem b2 = 0; b2 < n; ++b2)
          if (m.leq(b, b2) && !m.leq(m.product(a, b), m.product(a2, b2)))
            out.push_back({axiom::product_monotone, {a, a2, b, b2}});
    }
  for (elem a = 0; a < n; ++a) {
    if (m.is_idempotent(a) && !m.sharp_defined(a)) out.push_back({axiom::sharp_missing, {a}});
    if (!m.is_idempotent(a) && m.sharp_defined(a)) out.push_back({axiom::sharp_extra, {a}});
  }
  // Remaining sharp axioms only make sense where sharp is defined.
  auto def = [&](elem x) { return m.is_idempotent(x) && m.sharp_defined(x); };
  for (elem e = 0; e < n; ++e) {
    if (!def(e)) continue;
    elem es = m.sharp(e);
    if (!m.leq(es, e)) out.push_back({axiom::sharp_decreasing, {e}});
    if (m.product(es, es) != es) out.push_back({axiom::sharp_idempotent, {e}});
    if (m.is_idempotent(es) && m.sharp_defined(es) && m.sharp(es) != es)
      out.push_back({axiom::sharp_fixpoint, {e}});
    for (elem f = 0; f < n; ++f)
      if (def(f) && m.leq(e, f) && !m.leq(es, m.sharp(f)))
        out.push_back({axiom::sharp_monotone, {e, f}});
  }
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      elem ab = m.product(a, b), ba = m.product(b, a);
      if (def(ab) && def(ba) &&
          m.sharp(ab) != m.product(m.product(a, m.sharp(ba)), b))
        out.push_back({axiom::sharp_consistency, {a, b}});
    }
  if (def(m.unit()) && m.sharp(m.unit()) != m.unit())
    out.push_back({axiom::sharp_unit, {m.unit()}});
  return out;
}

stab_monoid lift_monoid(std::vector<std::string> names, elem unit, std::vector<elem> table) {
  const unsigned n = static_cast<unsigned>(names.size());
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw structural_error("product table is not |M| x |M|");
  std::vector<elem_set> leq(n);
  for (elem a = 0; a < n; ++a) leq[a] = bit(a);
  std::vector<elem> sharp(n, no_elem);
  for (elem a = 0; a < n; ++a)
    if (table[a * n + a] == a) sharp[a] = a;
  return stab_monoid(std::move(names), unit, std::move(table), std::move(leq), std::move(sharp));
}

stab_monoid product_monoid(const stab_monoid& a, const stab_monoid& b) {
  const unsigned na = a.size(), nb = b.size();
  if (static_cast<std::size_t>(na) * nb > max_elements)
    throw cap_error("product monoid exceeds the 64 element cap");
  const unsigned n = na * nb;
  std::vector<std::string> names(n);
  std::vector<elem> table(static_cast<std::size_t>(n) * n);
  std::vector<elem_set> leq(n, 0);
  std::vector<elem> sharp(n, no_elem);
  auto id = [&](elem x, elem y) { return x * nb + y; };
  for (elem x = 0; x < na; ++x)
    for (elem y = 0; y < nb; ++y) names[id(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
  for (elem x = 0; x < na; ++x)
    for (elem y = 0; y < nb; ++y)
      for (elem x2 = 0; x2 < na; ++x2)
        for (elem y2 = 0; y2 < nb; ++y2)
          table[id(x, y) * n + id(x2, y2)] = id(a.product(x, x2), b.product(y, y2));
  for (elem x = 0; x < na; ++x)
    for (elem y = 0; y < nb; ++y)
      for (elem x2 = 0; x2 < na; ++x2)
        if (a.leq(x, x2))
          for (elem y2 = 0; y2 < nb; ++y2)
            if (b.leq(y, y2)) leq[id(x, y)] |= bit(id(x2, y2));
  for (elem x = 0; x < na; ++x)
    for (elem y = 0; y < nb; ++y)
      if (a.is_idempotent(x) && b.is_idempotent(y) && a.sharp_defined(x) && b.sharp_defined(y))
        sharp[id(x, y)] = id(a.sharp(x), b.sharp(y));
  return stab_monoid(std::move(names), id(a.unit(), b.unit()), std::move(table), std::move(leq),
                     std::move(sharp));
}

submonoid_result restrict_monoid(const stab_monoid& m, elem_set keep) {
  if (!has(keep, m.unit())) throw structural_error("submonoid must contain the unit");
  std::vector<elem> remap(m.size(), no_elem);
  std::vector<elem> order;
  for_each_elem(keep, [&](elem x) {
    remap[x] = static_cast<elem>(order.size());
    order.push_back(x);
  });
  const unsigned n = static_cast<unsigned>(order.size());
  std::vector<std::string> names(n);
  std::vector<elem> table(static_cast<std::size_t>(n) * n);
  std::vector<elem_set> leq(n, 0);
  std::vector<elem> sharp(n, no_elem);
  for (elem i = 0; i < n; ++i) {
    names[i] = m.name(order[i]);
    for (elem j = 0; j < n; ++j) {
      elem p = m.product(order[i], order[j]);
      if (!has(keep, p)) throw structural_error("subset is not closed under product");
      table[i * n + j] = remap[p];
    }
    for (elem j = 0; j < n; ++j)
      if (m.leq(order[i], order[j])) leq[i] |= bit(j);
    if (m.is_idempotent(order[i]) && m.sharp_defined(order[i])) {
      elem s = m.sharp(order[i]);
      if (!has(keep, s)) throw structural_error("subset is not closed under sharp");
      sharp[i] = remap[s];
    }
  }
  return {stab_monoid(std::move(names), remap[m.unit()], std::move(table), std::move(leq),
                      std::move(sharp)),
          std::move(remap)};
}

elem_set generated_closure(const stab_monoid& m, elem_set seed) {
  elem_set reach = seed | bit(m.unit());
  bool grew = true;
  while (grew) {
    grew = false;
    elem_set next = reach;
    for_each_elem(reach, [&](elem x) {
      for_each_elem(reach, [&](elem y) { next |= bit(m.product(x, y)); });
      if (m.is_idempotent(x) && m.sharp_defined(x)) next |= bit(m.sharp(x));
    });
    if (next != reach) {
      reach = next;
      grew = true;
    }
  }
  return reach;
}

std::vector<morphism_violation> check_morphism(const morphism& mu) {
  std::vector<morphism_violation> out;
  const stab_monoid &s = *mu.src, &t = *mu.tgt;
  if (mu.map.size() != s.size()) throw structural_error("morphism map is not |src| entries");
  for (elem x : mu.map)
    if (x >= t.size()) throw structural_error("morphism image out of range");
  if (mu.map[s.unit()] != t.unit()) out.push_back({morphism_law::unit, {s.unit()}});
  for (elem a = 0; a < s.size(); ++a)
    for (elem b = 0; b < s.size(); ++b)
      if (mu.map[s.product(a, b)] != t.product(mu.map[a], mu.map[b]))
        out.push_back({morphism_law::product, {a, b}});
  for (elem a = 0; a < s.size(); ++a)
    for (elem b = 0; b < s.size(); ++b)
      if (s.leq(a, b) && !t.leq(mu.map[a], mu.map[b]))
        out.push_back({morphism_law::order, {a, b}});
  for (elem e = 0; e < s.size(); ++e)
    if (s.is_idempotent(e) && s.sharp_defined(e)) {
      elem img = mu.map[e];
      if (!t.is_idempotent(img) || !t.sharp_defined(img) ||
          t.sharp(img) != mu.map[s.sharp(e)])
        out.push_back({morphism_law::sharp, {e}});
    }
  return out;
}

ideal pullback_ideal(const morphism& mu, ideal target) {
  elem_set out = 0;
  for (elem a = 0; a < mu.src->size(); ++a)
    if (has(target.members, mu.map[a])) out |= bit(a);
  return {out};
}

}  // namespace costfn
