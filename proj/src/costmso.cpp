#include "costfn/costmso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "costfn/projection.hpp"

namespace costfn {

namespace {

bool is_atom(formula_kind k) {
  return k == formula_kind::letter_at || k == formula_kind::le ||
         k == formula_kind::subset || k == formula_kind::card_le;
}

struct formula_parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
      ++pos;
    }
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  static bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  void expect(char c, const char* what) {
    if (peek() != c) {
      throw io_error(std::string("expected '") + c + "' " + what + " at position " +
                     std::to_string(pos));
    }
    ++pos;
  }

  cost_formula parse_atom() {
    std::string word = ident();
    if (word.empty()) {
      throw io_error("expected a formula at position " + std::to_string(pos));
    }
    expect('(', "after the atom name");
    cost_formula f;
    if (word == "cardle") {
      f.kind = formula_kind::card_le;
      f.var = ident();
    } else if (word == "le" || word == "sub") {
      f.kind = word == "le" ? formula_kind::le : formula_kind::subset;
      f.var = ident();
      expect(',', "between the variables");
      f.var2 = ident();
      if (f.var2.empty()) throw io_error("expected a variable at position " + std::to_string(pos));
    } else {
      f.kind = formula_kind::letter_at;
      f.letter = std::move(word);
      f.var = ident();
    }
    if (f.var.empty()) throw io_error("expected a variable at position " + std::to_string(pos));
    expect(')', "after the atom");
    return f;
  }

  cost_formula parse_unary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      cost_formula f = parse_or();
      expect(')', "after the subformula");
      return f;
    }
    if (c == '!') {
      ++pos;
      cost_formula f = parse_atom();
      if (f.kind == formula_kind::card_le) {
        throw io_error("the cardinality atom cannot be negated");
      }
      f.negated = true;
      return f;
    }
    std::size_t start = pos;
    std::string word = ident();
    if (word == "E" || word == "A") {
      cost_formula f;
      f.kind = word == "E" ? formula_kind::exists : formula_kind::forall;
      f.var = ident();
      if (f.var.empty()) {
        throw io_error("expected a variable after the quantifier at position " +
                       std::to_string(pos));
      }
      expect('.', "after the quantified variable");
      f.subs.push_back(parse_or());
      return f;
    }
    pos = start;
    return parse_atom();
  }

  cost_formula parse_and() {
    cost_formula f = parse_unary();
    while (peek() == '&') {
      ++pos;
      cost_formula g;
      g.kind = formula_kind::f_and;
      g.subs.push_back(std::move(f));
      g.subs.push_back(parse_unary());
      f = std::move(g);
    }
    return f;
  }

  cost_formula parse_or() {
    cost_formula f = parse_and();
    while (peek() == '|') {
      ++pos;
      cost_formula g;
      g.kind = formula_kind::f_or;
      g.subs.push_back(std::move(f));
      g.subs.push_back(parse_and());
      f = std::move(g);
    }
    return f;
  }
};

void collect_free(const cost_formula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case formula_kind::letter_at:
    case formula_kind::card_le:
      out.insert(f.var);
      return;
    case formula_kind::le:
    case formula_kind::subset:
      out.insert(f.var);
      out.insert(f.var2);
      return;
    case formula_kind::f_and:
    case formula_kind::f_or:
      collect_free(f.subs[0], out);
      collect_free(f.subs[1], out);
      return;
    case formula_kind::exists:
    case formula_kind::forall: {
      std::set<std::string> inner;
      collect_free(f.subs[0], inner);
      inner.erase(f.var);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

}  // namespace

cost_formula parse_formula(std::string_view text) {
  formula_parser p{text};
  cost_formula f = p.parse_or();
  if (!p.at_end()) {
    throw io_error("unexpected trailing input at position " + std::to_string(p.pos));
  }
  return f;
}

std::string print_formula(const cost_formula& f) {
  const char* neg = f.negated ? "!" : "";
  switch (f.kind) {
    case formula_kind::letter_at:
      return neg + f.letter + "(" + f.var + ")";
    case formula_kind::le:
      return neg + std::string("le(") + f.var + "," + f.var2 + ")";
    case formula_kind::subset:
      return neg + std::string("sub(") + f.var + "," + f.var2 + ")";
    case formula_kind::card_le:
      return "cardle(" + f.var + ")";
    case formula_kind::f_and:
      return "(" + print_formula(f.subs[0]) + " & " + print_formula(f.subs[1]) + ")";
    case formula_kind::f_or:
      return "(" + print_formula(f.subs[0]) + " | " + print_formula(f.subs[1]) + ")";
    case formula_kind::exists:
      return "E " + f.var + "." + print_formula(f.subs[0]);
    case formula_kind::forall:
      return "A " + f.var + "." + print_formula(f.subs[0]);
  }
  throw structural_error("unknown formula kind");
}

std::vector<std::string> free_vars(const cost_formula& f) {
  std::set<std::string> names;
  collect_free(f, names);
  return std::vector<std::string>(names.begin(), names.end());
}

std::size_t extended_alphabet::var_position(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  throw structural_error("variable " + std::string(name) + " is not in the extended alphabet");
}

std::vector<std::string> extended_alphabet::names() const {
  std::vector<std::string> out;
  out.reserve(symbol_count());
  for (unsigned sym = 0; sym < symbol_count(); ++sym) {
    std::string name = base[base_of(sym)];
    if (!vars.empty()) {
      name += '.';
      for (std::size_t j = 0; j < vars.size(); ++j) {
        name += var_bit(sym, j) ? '1' : '0';
      }
    }
    out.push_back(std::move(name));
  }
  return out;
}

extended_alphabet make_extended(std::vector<std::string> base, std::vector<std::string> vars) {
  if (base.empty()) throw structural_error("the base alphabet is empty");
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 16) {
    throw scope_error("an extended alphabet over " + std::to_string(vars.size()) +
                      " variables is too large");
  }
  return extended_alphabet{std::move(base), std::move(vars)};
}

namespace {

unsigned base_letter_index(std::span<const std::string> base, const std::string& name) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == name) return static_cast<unsigned>(i);
  }
  throw structural_error("letter " + name + " is not in the alphabet");
}

struct evaluator {
  std::span<const unsigned> u;
  std::span<const std::string> base;
  std::map<std::string, std::uint64_t> val;

  std::uint64_t positions(const std::string& var) const {
    auto it = val.find(var);
    if (it == val.end()) throw structural_error("variable " + var + " has no assignment");
    return it->second;
  }

  static bool singleton(std::uint64_t s) { return s != 0 && (s & (s - 1)) == 0; }

  std::uint64_t run(const cost_formula& f) {
    switch (f.kind) {
      case formula_kind::letter_at: {
        std::uint64_t s = positions(f.var);
        unsigned letter = base_letter_index(base, f.letter);
        bool sat = singleton(s) && u[lowest(s)] == letter;
        return (sat != f.negated) ? 0 : infinite;
      }
      case formula_kind::le: {
        std::uint64_t s = positions(f.var);
        std::uint64_t t = positions(f.var2);
        bool sat = singleton(s) && singleton(t) && lowest(s) <= lowest(t);
        return (sat != f.negated) ? 0 : infinite;
      }
      case formula_kind::subset: {
        bool sat = (positions(f.var) & ~positions(f.var2)) == 0;
        return (sat != f.negated) ? 0 : infinite;
      }
      case formula_kind::card_le:
        return popcount(positions(f.var));
      case formula_kind::f_and:
        return std::max(run(f.subs[0]), run(f.subs[1]));
      case formula_kind::f_or:
        return std::min(run(f.subs[0]), run(f.subs[1]));
      case formula_kind::exists:
      case formula_kind::forall: {
        const bool least = f.kind == formula_kind::exists;
        std::uint64_t result = least ? infinite : 0;
        auto saved = val.find(f.var) != val.end()
                         ? std::optional<std::uint64_t>(val[f.var])
                         : std::nullopt;
        const std::uint64_t all = full_set(static_cast<unsigned>(u.size()));
        for (std::uint64_t s = 0;; ++s) {
          val[f.var] = s;
          std::uint64_t worth = run(f.subs[0]);
          result = least ? std::min(result, worth) : std::max(result, worth);
          if (s == all) break;
        }
        if (saved) {
          val[f.var] = *saved;
        } else {
          val.erase(f.var);
        }
        return result;
      }
    }
    throw structural_error("unknown formula kind");
  }
};

}  // namespace

std::uint64_t evaluate(const cost_formula& f, std::span<const unsigned> u,
                       const std::map<std::string, std::uint64_t>& valuation,
                       std::span<const std::string> base, std::size_t limit) {
  if (u.size() > limit || u.size() >= 63) {
    throw scope_error("word of length " + std::to_string(u.size()) +
                      " exceeds the brute-force limit " + std::to_string(limit));
  }
  for (unsigned x : u) {
    if (x >= base.size()) throw structural_error("letter index out of range");
  }
  const std::uint64_t all = full_set(static_cast<unsigned>(u.size()));
  for (const auto& [name, s] : valuation) {
    if ((s & ~all) != 0) {
      throw structural_error("the assignment of " + name +
                             " mentions positions beyond the word");
    }
  }
  for (const std::string& v : free_vars(f)) {
    if (valuation.find(v) == valuation.end()) {
      throw structural_error("free variable " + v + " has no assignment");
    }
  }
  evaluator ev{u, base, valuation};
  return ev.run(f);
}

namespace {

dfa complete_dfa(unsigned states, unsigned initial, std::vector<char> accepting,
                 std::vector<unsigned> next) {
  return dfa{states, initial, std::move(accepting), std::move(next)};
}

}  // namespace

dfa atom_dfa(const cost_formula& atom, const extended_alphabet& ext) {
  const std::size_t symbols = ext.symbol_count();
  dfa d;
  switch (atom.kind) {
    case formula_kind::letter_at: {
      const unsigned letter = base_letter_index(ext.base, atom.letter);
      const std::size_t xpos = ext.var_position(atom.var);
      const unsigned none = 0, one = 1, sink = 2;
      std::vector<unsigned> next(3 * symbols, sink);
      for (unsigned sym = 0; sym < symbols; ++sym) {
        const bool in_x = ext.var_bit(sym, xpos);
        next[none * symbols + sym] = !in_x ? none : (ext.base_of(sym) == letter ? one : sink);
        next[one * symbols + sym] = !in_x ? one : sink;
      }
      d = complete_dfa(3, none, {0, 1, 0}, std::move(next));
      break;
    }
    case formula_kind::le: {
      const std::size_t xpos = ext.var_position(atom.var);
      const std::size_t ypos = ext.var_position(atom.var2);
      const unsigned neither = 0, first_seen = 1, second_seen = 2, both = 3, sink = 4;
      std::vector<unsigned> next(5 * symbols, sink);
      for (unsigned sym = 0; sym < symbols; ++sym) {
        const bool x = ext.var_bit(sym, xpos);
        const bool y = ext.var_bit(sym, ypos);
        next[neither * symbols + sym] = !x && !y ? neither
                                        : x && !y ? first_seen
                                        : !x      ? second_seen
                                                  : both;
        next[first_seen * symbols + sym] = !x && !y ? first_seen : (!x && y ? both : sink);
        next[second_seen * symbols + sym] = !x && !y ? second_seen : sink;
        next[both * symbols + sym] = !x && !y ? both : sink;
      }
      d = complete_dfa(5, neither, {0, 0, 0, 1, 0}, std::move(next));
      break;
    }
    case formula_kind::subset: {
      const std::size_t xpos = ext.var_position(atom.var);
      const std::size_t ypos = ext.var_position(atom.var2);
      std::vector<unsigned> next(2 * symbols, 1);
      for (unsigned sym = 0; sym < symbols; ++sym) {
        const bool violates = ext.var_bit(sym, xpos) && !ext.var_bit(sym, ypos);
        next[0 * symbols + sym] = violates ? 1u : 0u;
      }
      d = complete_dfa(2, 0, {1, 0}, std::move(next));
      break;
    }
    default:
      throw structural_error("only the letter, order and containment atoms have automata");
  }
  if (atom.negated) {
    for (char& a : d.accepting) a = a ? 0 : 1;
  }
  return d;
}

namespace {

std::string transform_name(const std::vector<unsigned>& t, unsigned states) {
  std::string name = "[";
  for (unsigned i = 0; i < t.size(); ++i) {
    if (i > 0 && states > 10) name += '.';
    name += std::to_string(t[i]);
  }
  name += ']';
  return name;
}

}  // namespace

dfa_monoid transition_monoid(const dfa& d, std::size_t symbols) {
  using transform = std::vector<unsigned>;
  std::vector<transform> letters(symbols, transform(d.states));
  for (unsigned sym = 0; sym < symbols; ++sym) {
    for (unsigned q = 0; q < d.states; ++q) {
      letters[sym][q] = d.step(q, sym, symbols);
    }
  }

  std::vector<transform> elems;
  std::map<transform, elem> index;
  auto add = [&](const transform& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (elems.size() >= max_elements) {
      throw cap_error("the transition monoid exceeds the cap of " +
                      std::to_string(max_elements) + " elements");
    }
    elem id = static_cast<elem>(elems.size());
    index.emplace(t, id);
    elems.push_back(t);
    return id;
  };

  transform identity(d.states);
  for (unsigned q = 0; q < d.states; ++q) identity[q] = q;
  add(identity);
  for (std::size_t done = 0; done < elems.size(); ++done) {
    for (unsigned sym = 0; sym < symbols; ++sym) {
      transform extended(d.states);
      for (unsigned q = 0; q < d.states; ++q) {
        extended[q] = letters[sym][elems[done][q]];
      }
      add(extended);
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const transform& t : elems) names.push_back(transform_name(t, d.states));
  std::vector<elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      transform product(d.states);
      for (unsigned q = 0; q < d.states; ++q) product[q] = elems[y][elems[x][q]];
      auto it = index.find(product);
      if (it == index.end()) {
        throw structural_error("internal: the transformation closure is not closed");
      }
      table[x * n + y] = it->second;
    }
  }

  dfa_monoid out;
  out.monoid = lift_monoid(std::move(names), 0, std::move(table));
  out.h.resize(symbols);
  for (unsigned sym = 0; sym < symbols; ++sym) out.h[sym] = index.at(letters[sym]);
  for (std::size_t x = 0; x < n; ++x) {
    if (d.accepting[elems[x][d.initial]]) out.accepting |= bit(static_cast<elem>(x));
  }
  return out;
}

recogniser char_recogniser(const dfa& d, const extended_alphabet& ext) {
  dfa_monoid dm = transition_monoid(d, ext.symbol_count());
  const elem_set ideal = full_set(static_cast<unsigned>(dm.monoid.size())) & ~dm.accepting;
  return recogniser{std::move(dm.monoid), ext.names(), std::move(dm.h), ideal};
}

recogniser size_recogniser(const extended_alphabet& ext, const std::string& var) {
  const std::size_t xpos = ext.var_position(var);
  std::vector<elem> h(ext.symbol_count());
  for (unsigned sym = 0; sym < ext.symbol_count(); ++sym) {
    h[sym] = ext.var_bit(sym, xpos) ? 1 : 0;
  }
  return recogniser{counting_monoid(), ext.names(), std::move(h), bit(2)};
}

namespace {

struct compiled {
  recogniser rec;
  extended_alphabet ext;
};

/// Letter map from the target alphabet onto a sub-alphabet with fewer
/// variables: keep the base letter, keep the bits of the surviving
/// variables, drop the rest.
std::vector<unsigned> bit_erasure(const extended_alphabet& from, const extended_alphabet& to) {
  std::vector<std::size_t> where(to.vars.size());
  for (std::size_t j = 0; j < to.vars.size(); ++j) {
    where[j] = from.var_position(to.vars[j]);
  }
  std::vector<unsigned> map(from.symbol_count());
  for (unsigned sym = 0; sym < from.symbol_count(); ++sym) {
    unsigned bits = 0;
    for (std::size_t j = 0; j < to.vars.size(); ++j) {
      if (from.var_bit(sym, where[j])) bits |= 1u << j;
    }
    map[sym] = to.symbol(from.base_of(sym), bits);
  }
  return map;
}

compiled align(compiled c, const extended_alphabet& target) {
  if (c.ext.vars == target.vars) return c;
  std::vector<unsigned> to_old = bit_erasure(target, c.ext);
  return compiled{precompose(c.rec, target.names(), to_old), target};
}

compiled compile_rec(const cost_formula& f, const std::vector<std::string>& base) {
  try {
    switch (f.kind) {
      case formula_kind::letter_at:
      case formula_kind::le:
      case formula_kind::subset: {
        extended_alphabet ext = make_extended(base, free_vars(f));
        recogniser rec = char_recogniser(atom_dfa(f, ext), ext);
        return compiled{restrict_to_generated(rec), std::move(ext)};
      }
      case formula_kind::card_le: {
        extended_alphabet ext = make_extended(base, {f.var});
        return compiled{size_recogniser(ext, f.var), std::move(ext)};
      }
      case formula_kind::f_and:
      case formula_kind::f_or: {
        compiled left = compile_rec(f.subs[0], base);
        compiled right = compile_rec(f.subs[1], base);
        extended_alphabet ext = make_extended(base, free_vars(f));
        left = align(std::move(left), ext);
        right = align(std::move(right), ext);
        recogniser rec = f.kind == formula_kind::f_and ? max_rec(left.rec, right.rec)
                                                       : min_rec(left.rec, right.rec);
        return compiled{restrict_to_generated(rec), std::move(ext)};
      }
      case formula_kind::exists:
      case formula_kind::forall: {
        compiled inner = compile_rec(f.subs[0], base);
        std::vector<std::string> src_vars = inner.ext.vars;
        if (std::find(src_vars.begin(), src_vars.end(), f.var) == src_vars.end()) {
          src_vars.push_back(f.var);
          inner = align(std::move(inner), make_extended(base, std::move(src_vars)));
        }
        std::vector<std::string> kept = inner.ext.vars;
        kept.erase(std::remove(kept.begin(), kept.end(), f.var), kept.end());
        extended_alphabet target = make_extended(base, std::move(kept));
        std::vector<unsigned> z = bit_erasure(inner.ext, target);
        recogniser rec = f.kind == formula_kind::exists
                             ? inf_project(inner.rec, target.names(), z,
                                           powerset_scope::reachable)
                             : sup_project(inner.rec, target.names(), z,
                                           powerset_scope::reachable);
        return compiled{restrict_to_generated(rec), std::move(target)};
      }
    }
    throw structural_error("unknown formula kind");
  } catch (const cap_error& e) {
    throw cap_error(std::string(e.what()) + " (in " + print_formula(f) + ")");
  }
}

}  // namespace

recogniser compile(const cost_formula& f, const std::vector<std::string>& base) {
  return compile_rec(f, base).rec;
}

decision decide_formula(logic_task task, const cost_formula& f, const cost_formula* g,
                        const std::vector<std::string>& base) {
  auto require_closed = [](const cost_formula& formula) {
    std::vector<std::string> open = free_vars(formula);
    if (!open.empty()) {
      std::string joined;
      for (const std::string& v : open) {
        if (!joined.empty()) joined += ", ";
        joined += v;
      }
      throw structural_error("the formula has free variables: " + joined);
    }
  };
  require_closed(f);
  switch (task) {
    case logic_task::bounded:
      return decide_boundedness(compile(f, base));
    case logic_task::diverges:
      return decide_divergence(compile(f, base));
    case logic_task::dominates: {
      if (g == nullptr) throw structural_error("domination needs two formulas");
      require_closed(*g);
      return decide_domination(compile(f, base), compile(*g, base));
    }
  }
  throw structural_error("unknown decision task");
}

}  // namespace costfn
