#include "costfn/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace costfn {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(std::move(tok));
  return out;
}

/// One keyed section of a file: `key: payload tokens`. Table rows arrive
/// as key-less lines and are attached to the open table section.
struct parsed_file {
  std::vector<std::string> elements;
  std::string unit;
  std::vector<std::string> table;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> sharp;
  std::vector<std::pair<std::string, std::string>> letters;
  std::vector<std::string> ideal;
  bool saw_unit = false;
  bool saw_table = false;
  bool saw_ideal = false;
};

std::pair<std::string, std::string> split_arrow(const std::string& tok, const char* where) {
  std::size_t at = tok.find("->");
  if (at == std::string::npos || at == 0 || at + 2 >= tok.size()) {
    throw io_error(std::string("expected name->name in the ") + where + " line, got '" + tok +
                   "'");
  }
  return {tok.substr(0, at), tok.substr(at + 2)};
}

parsed_file parse_sections(std::istream& in, bool recogniser_keys) {
  parsed_file out;
  bool in_table = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t colon = line.find(':');
    std::string key;
    std::string rest = line;
    bool has_key = false;
    if (colon != std::string::npos) {
      key = line.substr(0, colon);
      std::vector<std::string> key_tokens = tokenize(key);
      if (key_tokens.size() == 1) {
        key = key_tokens[0];
        rest = line.substr(colon + 1);
        has_key = true;
      }
    }
    std::vector<std::string> tokens = tokenize(rest);
    if (!has_key) {
      if (tokens.empty()) continue;
      if (!in_table) {
        throw io_error("line " + std::to_string(lineno) + ": expected 'key: …', got '" + line +
                       "'");
      }
      out.table.insert(out.table.end(), tokens.begin(), tokens.end());
      continue;
    }
    in_table = false;
    if (key == "elements") {
      out.elements.insert(out.elements.end(), tokens.begin(), tokens.end());
    } else if (key == "unit") {
      if (tokens.size() != 1) {
        throw io_error("line " + std::to_string(lineno) + ": unit takes exactly one name");
      }
      out.unit = tokens[0];
      out.saw_unit = true;
    } else if (key == "table") {
      out.saw_table = true;
      out.table.insert(out.table.end(), tokens.begin(), tokens.end());
      in_table = true;
    } else if (key == "order") {
      for (const std::string& tok : tokens) {
        std::size_t at = tok.find('<');
        if (at == std::string::npos || at == 0 || at + 1 >= tok.size()) {
          throw io_error("line " + std::to_string(lineno) + ": expected name<name, got '" + tok +
                         "'");
        }
        out.order.emplace_back(tok.substr(0, at), tok.substr(at + 1));
      }
    } else if (key == "sharp") {
      for (const std::string& tok : tokens) out.sharp.push_back(split_arrow(tok, "sharp"));
    } else if (recogniser_keys && key == "letters") {
      for (const std::string& tok : tokens) out.letters.push_back(split_arrow(tok, "letters"));
    } else if (recogniser_keys && key == "ideal") {
      out.saw_ideal = true;
      out.ideal.insert(out.ideal.end(), tokens.begin(), tokens.end());
    } else {
      throw io_error("line " + std::to_string(lineno) + ": unknown section '" + key + "'");
    }
  }
  return out;
}

stab_monoid build_monoid(const parsed_file& f) {
  if (f.elements.empty()) throw io_error("missing elements line");
  if (!f.saw_unit) throw io_error("missing unit line");
  if (!f.saw_table) throw io_error("missing table");
  const std::size_t m = f.elements.size();
  if (m > max_elements) {
    throw io_error("the file declares " + std::to_string(m) + " elements but the cap is " +
                   std::to_string(max_elements));
  }
  std::map<std::string, elem> ids;
  for (std::size_t i = 0; i < m; ++i) {
    if (!ids.emplace(f.elements[i], static_cast<elem>(i)).second) {
      throw io_error("duplicate element name " + f.elements[i]);
    }
  }
  auto id_of = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw io_error("unknown element name " + name);
    return it->second;
  };

  if (f.table.size() != m * m) {
    throw io_error("the table has " + std::to_string(f.table.size()) + " entries, expected " +
                   std::to_string(m * m));
  }
  std::vector<elem> table(m * m);
  for (std::size_t i = 0; i < m * m; ++i) table[i] = id_of(f.table[i]);

  std::vector<elem_set> leq(m);
  for (std::size_t i = 0; i < m; ++i) leq[i] = bit(static_cast<elem>(i));
  for (const auto& [lo, hi] : f.order) leq[id_of(lo)] |= bit(id_of(hi));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (has(leq[i], static_cast<elem>(k))) leq[i] |= leq[k];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (has(leq[i], static_cast<elem>(j)) && has(leq[j], static_cast<elem>(i))) {
        throw io_error("the order is not antisymmetric: " + f.elements[i] + " and " +
                       f.elements[j]);
      }
    }
  }

  std::vector<elem> sharp(m, no_elem);
  for (const auto& [from, to] : f.sharp) {
    const elem x = id_of(from);
    if (table[x * m + x] != x) {
      throw io_error("sharp is given on the non-idempotent " + from);
    }
    sharp[x] = id_of(to);
  }

  return stab_monoid(f.elements, id_of(f.unit), table, leq, sharp);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  return out;
}

void write_monoid_body(std::ostream& out, const stab_monoid& m) {
  out << "elements:";
  for (elem x = 0; x < m.size(); ++x) out << ' ' << m.name(x);
  out << "\nunit: " << m.name(m.unit()) << "\ntable:\n";
  for (elem x = 0; x < m.size(); ++x) {
    for (elem y = 0; y < m.size(); ++y) {
      out << (y == 0 ? "" : " ") << m.name(m.product(x, y));
    }
    out << '\n';
  }
  for (elem x = 0; x < m.size(); ++x) {
    for (elem y = 0; y < m.size(); ++y) {
      if (x != y && m.leq(x, y)) out << "order: " << m.name(x) << '<' << m.name(y) << '\n';
    }
  }
  bool any_sharp = false;
  for (elem x = 0; x < m.size(); ++x) {
    if (!m.sharp_defined(x)) continue;
    out << (any_sharp ? " " : "sharp: ") << m.name(x) << "->" << m.name(m.sharp(x));
    any_sharp = true;
  }
  if (any_sharp) out << '\n';
}

}  // namespace

stab_monoid load_monoid(std::istream& in) {
  return build_monoid(parse_sections(in, false));
}

stab_monoid load_monoid_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_monoid(in);
}

void save_monoid(std::ostream& out, const stab_monoid& m) {
  write_monoid_body(out, m);
}

void save_monoid_file(const std::string& path, const stab_monoid& m) {
  std::ofstream out = open_output(path);
  save_monoid(out, m);
}

recogniser load_recogniser(std::istream& in) {
  parsed_file f = parse_sections(in, true);
  stab_monoid m = build_monoid(f);
  if (f.letters.empty()) throw io_error("missing letters line");
  recogniser r;
  for (const auto& [symbol, target] : f.letters) {
    for (const std::string& seen : r.alphabet) {
      if (seen == symbol) throw io_error("duplicate letter " + symbol);
    }
    r.alphabet.push_back(symbol);
    r.h.push_back(m.find(target));
    if (r.h.back() == no_elem) throw io_error("unknown element name " + target);
  }
  for (const std::string& name : f.ideal) {
    const elem x = m.find(name);
    if (x == no_elem) throw io_error("unknown element name " + name);
    r.ideal |= bit(x);
  }
  r.monoid = std::move(m);
  check_recogniser(r);
  return r;
}

recogniser load_recogniser_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_recogniser(in);
}

void save_recogniser(std::ostream& out, const recogniser& r) {
  write_monoid_body(out, r.monoid);
  out << "letters:";
  for (std::size_t i = 0; i < r.alphabet.size(); ++i) {
    out << ' ' << r.alphabet[i] << "->" << r.monoid.name(r.h[i]);
  }
  out << "\nideal:";
  for_each_elem(r.ideal, [&](elem x) { out << ' ' << r.monoid.name(x); });
  out << '\n';
}

void save_recogniser_file(const std::string& path, const recogniser& r) {
  std::ofstream out = open_output(path);
  save_recogniser(out, r);
}

}  // namespace costfn
