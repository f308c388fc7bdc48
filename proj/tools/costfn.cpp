#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "costfn/construct.hpp"
#include "costfn/costmso.hpp"
#include "costfn/green.hpp"
#include "costfn/io.hpp"
#include "costfn/monoid.hpp"
#include "costfn/oracle.hpp"
#include "costfn/projection.hpp"
#include "costfn/recogniser.hpp"
#include "costfn/sharpexpr.hpp"
#include "costfn/tree.hpp"

namespace {

using namespace costfn;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

/// Words are written as one character per letter, or comma-separated when
/// the alphabet has multi-character names. The empty string is the empty
/// word.
std::vector<unsigned> parse_word(const std::string& text, std::span<const std::string> letters) {
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] == name) return static_cast<unsigned>(i);
    }
    throw io_error("letter '" + name + "' is not in the alphabet");
  };
  std::vector<unsigned> word;
  if (text.empty()) return word;
  if (text.find(',') != std::string::npos) {
    for (const std::string& part : split(text, ',')) word.push_back(index_of(part));
    return word;
  }
  bool single = true;
  for (const std::string& name : letters) single = single && name.size() == 1;
  if (!single) {
    word.push_back(index_of(text));
    return word;
  }
  for (char c : text) word.push_back(index_of(std::string(1, c)));
  return word;
}

std::vector<std::string> parse_alphabet(const std::string& text) {
  if (text.empty()) throw io_error("the alphabet is empty");
  std::vector<std::string> out;
  if (text.find(',') != std::string::npos) {
    out = split(text, ',');
  } else {
    for (char c : text) out.emplace_back(1, c);
  }
  for (const std::string& name : out) {
    if (name.empty()) throw io_error("empty letter name in the alphabet");
  }
  return out;
}

cost_formula read_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line;
    text += ' ';
  }
  return parse_formula(text);
}

std::string show_value(std::uint64_t v) {
  return v == infinite ? "inf" : std::to_string(v);
}

bool machine_format(const std::string& format) { return format == "machine"; }

int report_decision(const decision& d, std::span<const std::string> letters,
                    const std::string& format) {
  const bool machine = machine_format(format);
  if (d.holds) {
    std::cout << (machine ? "result=yes" : "yes") << '\n';
    return 0;
  }
  const std::string expr = d.witness ? print_expr(*d.witness, letters) : std::string("?");
  if (machine) {
    std::cout << "result=no\nwitness=" << expr << '\n';
  } else {
    std::cout << "no witness=" << expr << '\n';
  }
  return 1;
}

void collect_formula_letters(const cost_formula& f, std::vector<std::string>& out) {
  if (f.kind == formula_kind::letter_at) out.push_back(f.letter);
  for (const cost_formula& sub : f.subs) collect_formula_letters(sub, out);
}

std::map<std::string, std::uint64_t> parse_assignments(const std::vector<std::string>& given) {
  std::map<std::string, std::uint64_t> valuation;
  for (const std::string& text : given) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw io_error("expected VAR=positions in --assign, got '" + text + "'");
    }
    const std::string var = text.substr(0, eq);
    std::uint64_t mask = 0;
    const std::string rest = text.substr(eq + 1);
    if (!rest.empty()) {
      for (const std::string& part : split(rest, ',')) {
        std::size_t used = 0;
        unsigned long p = std::stoul(part, &used);
        if (used != part.size() || p == 0) {
          throw io_error("positions are 1-based numbers, got '" + part + "'");
        }
        mask |= std::uint64_t{1} << (p - 1);
      }
    }
    valuation[var] |= mask;
  }
  return valuation;
}

int run_validate(const std::string& path, const std::string& format) {
  stab_monoid m = load_monoid_file(path);
  std::vector<violation> bad = validate_axioms(m);
  const bool machine = machine_format(format);
  if (bad.empty()) {
    std::cout << (machine ? "ok=true" : "ok") << '\n';
    return 0;
  }
  if (machine) std::cout << "ok=false\n";
  for (const violation& v : bad) {
    std::cout << (machine ? "violation=" : "") << describe(v, m) << '\n';
  }
  return 1;
}

std::string joined_names(const stab_monoid& m, elem_set s, const char* sep) {
  std::string out;
  for_each_elem(s, [&](elem x) {
    if (!out.empty()) out += sep;
    out += m.name(x);
  });
  return out;
}

int run_jclasses(const std::string& path, const std::string& format) {
  stab_monoid m = load_monoid_file(path);
  j_analysis j = analyze_j(m);
  const bool machine = machine_format(format);
  for (std::size_t c = 0; c < j.classes.size(); ++c) {
    if (machine) {
      std::cout << "class=" << joined_names(m, j.classes[c], ",")
                << " regular=" << (j.regular[c] ? "yes" : "no");
      if (j.regular[c]) {
        std::cout << " stable=" << (j.stable[c] ? "yes" : "no")
                  << " sharp_class=" << joined_names(m, j.classes[j.sharp_class[c]], ",");
      }
      std::cout << '\n';
    } else {
      std::cout << '{' << joined_names(m, j.classes[c], " ") << "}: ";
      if (!j.regular[c]) {
        std::cout << "irregular\n";
      } else {
        std::cout << "regular, " << (j.stable[c] ? "stable" : "not stable") << ", sharp class {"
                  << joined_names(m, j.classes[j.sharp_class[c]], " ") << "}\n";
      }
    }
  }
  return 0;
}

struct letter_map {
  std::vector<std::string> alphabet;
  std::vector<unsigned> z;
};

letter_map parse_letter_map(const std::string& text, std::span<const std::string> old_letters) {
  letter_map out;
  out.z.assign(old_letters.size(), no_elem);
  for (const std::string& entry : split(text, ',')) {
    std::size_t at = entry.find(':');
    if (at == std::string::npos || at == 0 || at + 1 >= entry.size()) {
      throw io_error("expected old:new in --map, got '" + entry + "'");
    }
    const std::string old_name = entry.substr(0, at);
    const std::string new_name = entry.substr(at + 1);
    std::size_t old_index = old_letters.size();
    for (std::size_t i = 0; i < old_letters.size(); ++i) {
      if (old_letters[i] == old_name) old_index = i;
    }
    if (old_index == old_letters.size()) {
      throw io_error("letter '" + old_name + "' is not in the alphabet");
    }
    if (out.z[old_index] != no_elem) throw io_error("letter '" + old_name + "' mapped twice");
    std::size_t new_index = out.alphabet.size();
    for (std::size_t i = 0; i < out.alphabet.size(); ++i) {
      if (out.alphabet[i] == new_name) new_index = i;
    }
    if (new_index == out.alphabet.size()) out.alphabet.push_back(new_name);
    out.z[old_index] = static_cast<unsigned>(new_index);
  }
  for (std::size_t i = 0; i < old_letters.size(); ++i) {
    if (out.z[i] == no_elem) {
      throw io_error("letter '" + old_letters[i] + "' has no entry in --map");
    }
  }
  return out;
}

void emit_recogniser(const recogniser& r, const std::string& out_path) {
  if (out_path.empty()) {
    save_recogniser(std::cout, r);
  } else {
    save_recogniser_file(out_path, r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular cost functions over finite words"};
  app.require_subcommand(1);
  std::string format = "plain";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output style")
        ->check(CLI::IsMember({"plain", "machine"}));
  };

  std::string path_a, path_b, word_text, out_path, map_text, alphabet_text, formula_text;
  std::string variant_name = "m", task_name;
  std::uint64_t threshold = 0;
  unsigned height = 0;
  bool has_height = false, want_inf = false, want_sup = false;
  std::vector<std::string> assigns;

  CLI::App* validate = app.add_subcommand("validate", "check the axioms of a monoid file");
  validate->add_option("monoid", path_a, "monoid file")->required();
  add_format(validate);

  CLI::App* jclasses = app.add_subcommand("jclasses", "print the J-class decomposition");
  jclasses->add_option("monoid", path_a, "monoid file")->required();
  add_format(jclasses);

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build an exact computation of bounded height");
  construct_cmd->add_option("monoid", path_a, "monoid file")->required();
  construct_cmd->add_option("--word", word_text, "word of element names")->required();
  construct_cmd->add_option("--n", threshold, "threshold")->required();
  add_format(construct_cmd);

  CLI::App* compute = app.add_subcommand("compute", "evaluate one semantic function");
  compute->add_option("recogniser", path_a, "recogniser file")->required();
  compute->add_option("--word", word_text, "input word")->required();
  compute->add_option("--variant", variant_name, "mm, m, p or pp")
      ->check(CLI::IsMember({"mm", "m", "p", "pp"}));
  compute->add_option("--p", height, "height budget (default: three times the carrier)")
      ->each([&](const std::string&) { has_height = true; });
  add_format(compute);

  CLI::App* dominates = app.add_subcommand("dominates", "decide f dominated by g");
  dominates->add_option("f", path_a, "left recogniser file")->required();
  dominates->add_option("g", path_b, "right recogniser file")->required();
  add_format(dominates);

  CLI::App* bounded = app.add_subcommand("bounded", "decide boundedness");
  bounded->add_option("f", path_a, "recogniser file")->required();
  add_format(bounded);

  CLI::App* diverges = app.add_subcommand("diverges", "decide divergence");
  diverges->add_option("f", path_a, "recogniser file")->required();
  add_format(diverges);

  CLI::App* project = app.add_subcommand("project", "project a recogniser along a letter map");
  project->add_option("recogniser", path_a, "recogniser file")->required();
  project->add_option("--map", map_text, "letter map old:new,…")->required();
  project->add_flag("--inf", want_inf, "infimum projection");
  project->add_flag("--sup", want_sup, "supremum projection");
  project->add_option("-o,--output", out_path, "output file (default: stdout)");
  add_format(project);

  CLI::App* compile_cmd = app.add_subcommand("compile", "compile a formula to a recogniser");
  compile_cmd->add_option("formula", formula_text, "cost monadic formula")->required();
  compile_cmd->add_option("--alphabet", alphabet_text, "base alphabet")->required();
  compile_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");
  add_format(compile_cmd);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on one word");
  eval->add_option("formula", formula_text, "cost monadic formula")->required();
  eval->add_option("--word", word_text, "input word")->required();
  eval->add_option("--alphabet", alphabet_text, "base alphabet (default: inferred)");
  eval->add_option("--assign", assigns, "free-variable assignment VAR=1,3 (1-based)");
  add_format(eval);

  CLI::App* decide = app.add_subcommand("decide", "decide a property of closed formulas");
  decide->add_option("--task", task_name, "bounded, diverges or dominates")
      ->required()
      ->check(CLI::IsMember({"bounded", "diverges", "dominates"}));
  decide->add_option("f", path_a, "formula file")->required();
  decide->add_option("g", path_b, "second formula file (dominates)");
  decide->add_option("--alphabet", alphabet_text, "base alphabet")->required();
  add_format(decide);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(path_a, format);
    if (app.got_subcommand(jclasses)) return run_jclasses(path_a, format);

    if (app.got_subcommand(construct_cmd)) {
      stab_monoid m = load_monoid_file(path_a);
      std::vector<unsigned> w = parse_word(word_text, m.names());
      comp_tree t = construct(m, w, threshold);
      const std::string text = print_tree(t, m);
      std::cout << (machine_format(format) ? "tree=" : "") << text << '\n';
      return 0;
    }

    if (app.got_subcommand(compute)) {
      recogniser r = load_recogniser_file(path_a);
      std::vector<unsigned> u = parse_word(word_text, r.alphabet);
      const sem_variant v = variant_name == "mm"  ? sem_variant::minus_minus
                            : variant_name == "m" ? sem_variant::minus
                            : variant_name == "p" ? sem_variant::plus
                                                  : sem_variant::plus_plus;
      const unsigned p = has_height ? height : 3 * static_cast<unsigned>(r.monoid.size());
      const std::uint64_t value = semantic_value(r, u, v, p);
      std::cout << (machine_format(format) ? "value=" : "") << show_value(value) << '\n';
      return 0;
    }

    if (app.got_subcommand(dominates)) {
      recogniser f = load_recogniser_file(path_a);
      recogniser g = load_recogniser_file(path_b);
      return report_decision(decide_domination(f, g), f.alphabet, format);
    }
    if (app.got_subcommand(bounded)) {
      recogniser f = load_recogniser_file(path_a);
      return report_decision(decide_boundedness(f), f.alphabet, format);
    }
    if (app.got_subcommand(diverges)) {
      recogniser f = load_recogniser_file(path_a);
      return report_decision(decide_divergence(f), f.alphabet, format);
    }

    if (app.got_subcommand(project)) {
      if (want_inf == want_sup) {
        throw io_error("pass exactly one of --inf and --sup");
      }
      recogniser r = load_recogniser_file(path_a);
      letter_map lm = parse_letter_map(map_text, r.alphabet);
      recogniser projected = want_inf ? inf_project(r, lm.alphabet, lm.z)
                                      : sup_project(r, lm.alphabet, lm.z);
      emit_recogniser(projected, out_path);
      return 0;
    }

    if (app.got_subcommand(compile_cmd)) {
      cost_formula f = parse_formula(formula_text);
      recogniser r = compile(f, parse_alphabet(alphabet_text));
      emit_recogniser(r, out_path);
      return 0;
    }

    if (app.got_subcommand(eval)) {
      cost_formula f = parse_formula(formula_text);
      std::vector<std::string> base;
      if (!alphabet_text.empty()) {
        base = parse_alphabet(alphabet_text);
      } else {
        collect_formula_letters(f, base);
        if (word_text.find(',') == std::string::npos) {
          for (char c : word_text) base.emplace_back(1, c);
        } else {
          for (const std::string& part : split(word_text, ',')) base.push_back(part);
        }
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
        if (base.empty()) base.emplace_back("a");
      }
      std::vector<unsigned> u = parse_word(word_text, base);
      const std::uint64_t value = evaluate(f, u, parse_assignments(assigns), base);
      std::cout << (machine_format(format) ? "value=" : "") << show_value(value) << '\n';
      return 0;
    }

    if (app.got_subcommand(decide)) {
      const std::vector<std::string> base = parse_alphabet(alphabet_text);
      cost_formula f = read_formula_file(path_a);
      const logic_task task = task_name == "bounded"    ? logic_task::bounded
                              : task_name == "diverges" ? logic_task::diverges
                                                        : logic_task::dominates;
      decision d;
      if (task == logic_task::dominates) {
        if (path_b.empty()) throw io_error("dominates needs two formula files");
        cost_formula g = read_formula_file(path_b);
        d = decide_formula(task, f, &g, base);
      } else {
        if (!path_b.empty()) throw io_error("only dominates takes a second formula");
        d = decide_formula(task, f, nullptr, base);
      }
      return report_decision(d, base, format);
    }
  } catch (const costfn_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
