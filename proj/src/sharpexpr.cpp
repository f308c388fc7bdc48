#include "costfn/sharpexpr.hpp"

#include <algorithm>
#include <deque>

#include "costfn/green.hpp"

namespace costfn {

sharp_expr xletter(unsigned id) { return sharp_expr{expr_kind::letter, id, {}}; }

sharp_expr xconcat(sharp_expr left, sharp_expr right) {
  sharp_expr e{expr_kind::concat, 0, {}};
  e.subs.push_back(std::move(left));
  e.subs.push_back(std::move(right));
  return e;
}

sharp_expr xsharp(sharp_expr sub) {
  sharp_expr e{expr_kind::omega_sharp, 0, {}};
  e.subs.push_back(std::move(sub));
  return e;
}

bool is_strict(const sharp_expr& e) {
  if (e.kind == expr_kind::omega_sharp) return true;
  return std::ranges::any_of(e.subs, [](const sharp_expr& s) { return is_strict(s); });
}

sharp_expr map_letters(const sharp_expr& e, std::span<const unsigned> to) {
  if (e.kind == expr_kind::letter) return xletter(to[e.letter]);
  sharp_expr out{e.kind, 0, {}};
  for (const sharp_expr& s : e.subs) out.subs.push_back(map_letters(s, to));
  return out;
}

namespace {

struct expr_parser {
  std::string_view text;
  std::span<const std::string> letters;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  std::optional<unsigned> match_letter() {
    std::size_t best_len = 0;
    unsigned best = 0;
    for (unsigned i = 0; i < letters.size(); ++i) {
      const std::string& name = letters[i];
      if (name.empty() || name.size() <= best_len) continue;
      if (text.substr(pos, name.size()) == name) {
        best_len = name.size();
        best = i;
      }
    }
    if (best_len == 0) return std::nullopt;
    pos += best_len;
    return best;
  }

  sharp_expr parse_item() {
    if (text[pos] == '(') {
      ++pos;
      sharp_expr inner = parse_sequence();
      skip_space();
      if (pos == text.size() || text[pos] != ')')
        throw io_error("expression is missing a closing parenthesis");
      ++pos;
      if (pos < text.size() && text[pos] == '#') {
        ++pos;
        return xsharp(std::move(inner));
      }
      return inner;
    }
    if (text[pos] == ')' || text[pos] == '#')
      throw io_error(std::string("unexpected '") + text[pos] + "' in expression");
    if (auto id = match_letter()) return xletter(*id);
    throw io_error("unknown letter at '" + std::string(text.substr(pos)) + "'");
  }

  sharp_expr parse_sequence() {
    skip_space();
    if (pos == text.size() || text[pos] == ')') throw io_error("empty expression");
    sharp_expr acc = parse_item();
    while (!at_end() && text[pos] != ')') acc = xconcat(std::move(acc), parse_item());
    return acc;
  }
};

}  // namespace

sharp_expr parse_expr(std::string_view text, std::span<const std::string> letters) {
  expr_parser parser{text, letters};
  sharp_expr e = parser.parse_sequence();
  if (!parser.at_end()) throw io_error("trailing input after expression");
  return e;
}

std::string print_expr(const sharp_expr& e, std::span<const std::string> letters) {
  switch (e.kind) {
    case expr_kind::letter: return letters[e.letter];
    case expr_kind::concat: return print_expr(e.subs[0], letters) + print_expr(e.subs[1], letters);
    case expr_kind::omega_sharp: return "(" + print_expr(e.subs[0], letters) + ")#";
  }
  return {};
}

namespace {

elem power(const stab_monoid& m, elem x, unsigned exponent) {
  elem acc = m.unit();
  for (unsigned i = 0; i < exponent; ++i) acc = m.product(acc, x);
  return acc;
}

}  // namespace

elem expr_value(const stab_monoid& m, const sharp_expr& e) {
  switch (e.kind) {
    case expr_kind::letter:
      if (e.letter >= m.size()) throw structural_error("expression letter outside the monoid");
      return e.letter;
    case expr_kind::concat:
      return m.product(expr_value(m, e.subs[0]), expr_value(m, e.subs[1]));
    case expr_kind::omega_sharp: {
      const elem base = power(m, expr_value(m, e.subs[0]), compute_omega(m).omega);
      return m.sharp(base);
    }
  }
  throw structural_error("malformed expression node");
}

std::vector<unsigned> unfold(const sharp_expr& e, std::uint64_t n) {
  if (n == 0) throw structural_error("unfolding needs n >= 1");
  std::vector<unsigned> word;
  auto emit = [&](const sharp_expr& sub, auto&& self) -> void {
    switch (sub.kind) {
      case expr_kind::letter: word.push_back(sub.letter); return;
      case expr_kind::concat:
        self(sub.subs[0], self);
        self(sub.subs[1], self);
        return;
      case expr_kind::omega_sharp:
        for (std::uint64_t i = 0; i < n; ++i) self(sub.subs[0], self);
        return;
    }
  };
  emit(e, emit);
  return word;
}

namespace {

comp_tree canonical_rec(const stab_monoid& m, const sharp_expr& e, std::uint64_t n,
            unsigned omega) {
  switch (e.kind) {
    case expr_kind::letter:
      return leaf(e.letter);
    case expr_kind::concat: {
      comp_tree l = canonical_rec(m, e.subs[0], n, omega);
      comp_tree r = canonical_rec(m, e.subs[1], n, omega);
      const elem v = m.product(l.value, r.value);
      return node(v, {std::move(l), std::move(r)});
    }
    case expr_kind::omega_sharp: {
      comp_tree piece = canonical_rec(m, e.subs[0], n, omega);
      const elem v = piece.value;
      comp_tree block = piece;
      for (unsigned j = 1; j < omega; ++j) {
        const elem grown = m.product(block.value, v);
        block = node(grown, {std::move(block), piece});
      }
      const elem idem = block.value;
      std::vector<comp_tree> copies(static_cast<std::size_t>(n) + 1, block);
      return node(m.sharp(idem), std::move(copies));
    }
  }
  throw structural_error("malformed expression node");
}

}  // namespace

comp_tree canonical_computation(const stab_monoid& m, const sharp_expr& e, std::uint64_t n) {
  if (n == 0) throw structural_error("canonical computations need n >= 1");
  return canonical_rec(m, e, n, compute_omega(m).omega);
}

closure_result sharp_closure(const stab_monoid& m, elem_set from) {
  closure_result out;
  out.witness.assign(m.size(), std::nullopt);

  const std::size_t states = 2 * m.size();
  std::vector<std::optional<sharp_expr>> state_witness(states);
  std::vector<unsigned> reached;
  std::deque<unsigned> queue;

  auto state_of = [](elem x, bool strict) { return 2 * x + (strict ? 1u : 0u); };
  auto reach = [&](elem x, bool strict, sharp_expr how) {
    const unsigned s = state_of(x, strict);
    if (state_witness[s]) return;
    state_witness[s] = std::move(how);
    reached.push_back(s);
    queue.push_back(s);
    out.closure |= bit(x);
    if (strict) out.strict |= bit(x);
    if (!out.witness[x]) out.witness[x] = *state_witness[s];
  };

  for_each_elem(from, [&](elem x) {
    if (x >= m.size()) throw structural_error("closure seed outside the monoid");
    reach(x, false, xletter(x));
  });

  while (!queue.empty()) {
    const unsigned s = queue.front();
    queue.pop_front();
    const elem x = s / 2;
    const bool xs = (s % 2) != 0;
    const std::vector<unsigned> snapshot = reached;
    for (unsigned t : snapshot) {
      const elem y = t / 2;
      const bool ys = (t % 2) != 0;
      reach(m.product(x, y), xs || ys, xconcat(*state_witness[s], *state_witness[t]));
      reach(m.product(y, x), xs || ys, xconcat(*state_witness[t], *state_witness[s]));
    }
    if (m.is_idempotent(x) && m.sharp_defined(x))
      reach(m.sharp(x), true, xsharp(*state_witness[s]));
  }
  return out;
}

}  // namespace costfn
