#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stylic/derivation.hpp"
#include "stylic/enumerate.hpp"
#include "stylic/errors.hpp"
#include "stylic/identity.hpp"
#include "stylic/io.hpp"
#include "stylic/presentation.hpp"
#include "stylic/rewrite.hpp"
#include "stylic/table.hpp"
#include "stylic/verify.hpp"
#include "stylic/word.hpp"

namespace {

using namespace stylic;
using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 pass/true, 1 fail/false/counterexample, 2 usage or input
// error, 3 resource limit.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::size_t env_override(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (...) {
    throw input_error(std::string(name) + " must be a non-negative integer");
  }
}

Limits limits_from_env() {
  Limits lim;
  lim.max_rules = env_override("STYLIC_MAX_RULES", lim.max_rules);
  lim.max_word_length =
      env_override("STYLIC_MAX_WORD_LENGTH", lim.max_word_length);
  lim.max_elements = env_override("STYLIC_MAX_ELEMENTS", lim.max_elements);
  lim.max_steps = env_override("STYLIC_MAX_STEPS", lim.max_steps);
  return lim;
}

Presentation preset_presentation(const std::string& family, unsigned n) {
  if (family == "stylic") return stylic_presentation(n);
  if (family == "kiselman") return kiselman_presentation(n);
  if (family == "catalan") return catalan_presentation(n);
  throw input_error("unknown family: " + family);
}

// Input selector shared by the presentation-consuming subcommands: either a
// preset (--family/--n) or a presentation file.
struct Source {
  std::string family;
  unsigned n = 2;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "preset family")
        ->check(CLI::IsMember({"stylic", "kiselman", "catalan"}));
    cmd->add_option("--n", n, "preset rank");
    cmd->add_option("--input", input, "presentation file");
  }

  Presentation load() const {
    if (!input.empty()) return parse_presentation_json(read_file(input));
    if (family.empty())
      throw input_error("give either --family with --n or --input FILE");
    return preset_presentation(family, n);
  }
};

// Single-character letters ordered alphabetically; both words share one
// alphabet so letter indices (and shortlex tie-breaks) are stable.
Alphabet free_alphabet(std::initializer_list<std::string_view> texts) {
  std::set<char> chars;
  for (std::string_view t : texts)
    if (t != "1")
      for (char c : t) chars.insert(c);
  if (chars.empty()) chars.insert('x');
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  // evaluate the count before the vector is moved from
  unsigned count = static_cast<unsigned>(names.size());
  return Alphabet(count, std::move(names));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::string presentation_to_text(const Presentation& p) {
  Alphabet gens = Alphabet::generators(p.generators);
  std::string out = "generators: " + std::to_string(p.generators) + "\n";
  out += "relations:\n";
  for (const auto& [lhs, rhs] : p.relations)
    out += "  " + gens.format(lhs) + " = " + gens.format(rhs) + "\n";
  return out;
}

std::string table_to_text(const MonoidTable& t) {
  Alphabet gens = Alphabet::generators(std::max<unsigned>(
      1, static_cast<unsigned>(t.generator_images.size())));
  std::string out = "size: " + std::to_string(t.size) + "\n";
  out += "engine: " + t.engine + "\n";
  out += "representatives:";
  for (const word_type& w : t.representatives) out += " " + gens.format(w);
  out += "\n";
  return out;
}

int run_preset(const Source& src, const std::string& format,
               const std::string& out_path) {
  Presentation p = src.load();
  emit(format == "records" || !out_path.empty() ? presentation_to_json_text(p)
                                                : presentation_to_text(p),
       out_path);
  return kExitTrue;
}

int run_enumerate(const Source& src, const std::string& engine,
                  const std::string& format, const std::string& out_path,
                  const Limits& lim) {
  Presentation p = src.load();
  MonoidTable tab;
  if (engine == "auto") {
    tab = enumerate(p, lim);
  } else if (engine == "kb") {
    CompletionOutcome outcome = knuth_bendix(p, lim);
    if (auto* inc = std::get_if<Incomplete>(&outcome))
      throw resource_error("completion hit " + inc->limit);
    tab = enumerate(p, lim);
  } else if (engine == "closure") {
    tab = brute_force_closure(p, lim);
  } else {  // both: the completion table must match the oracle exactly
    MonoidTable kb = enumerate(p, lim);
    MonoidTable oracle = brute_force_closure(p, lim);
    if (!(kb == oracle)) {
      std::cerr << "engines disagree: " << kb.engine << " size " << kb.size
                << " vs closure size " << oracle.size << "\n";
      return kExitFalse;
    }
    tab = kb;
  }
  emit(format == "records" || !out_path.empty() ? table_to_json_text(tab)
                                                : table_to_text(tab),
       out_path);
  return kExitTrue;
}

int run_nf(const Source& src, const std::string& word_text,
           const std::string& format, const Limits& lim) {
  Presentation p = src.load();
  Alphabet gens = Alphabet::generators(p.generators);
  word_type w = gens.parse(word_text);
  MonoidTable tab = enumerate(p, lim);
  const word_type& nf = tab.representatives[tab.evaluate_word(w)];
  if (format == "records") {
    ordered_json j{{"word", gens.format(w)}, {"normal_form", gens.format(nf)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gens.format(nf) << "\n";
  }
  return kExitTrue;
}

int run_subwords(const std::string& word_text, unsigned k,
                 const std::string& format) {
  Alphabet letters = free_alphabet({word_text});
  word_type w = letters.parse(word_text);
  SubwordSet s = subwords_up_to(w, k);
  if (format == "records") {
    ordered_json j{{"word", letters.format(w)}, {"k", k}};
    j["members"] = ordered_json::array();
    for (const word_type& m : s.members) j["members"].push_back(letters.format(m));
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < s.members.size(); ++i)
      std::cout << (i ? " " : "") << letters.format(s.members[i]);
    std::cout << "\n";
  }
  return kExitTrue;
}

int run_simon(const std::string& left, const std::string& right, unsigned k,
              bool witness, const std::string& format) {
  Alphabet letters = free_alphabet({left, right});
  word_type u = letters.parse(left);
  word_type v = letters.parse(right);
  bool equivalent = simon_equivalent(u, v, k);
  std::optional<word_type> d;
  if (!equivalent && witness) d = distinguishing_subword(u, v, k);
  if (format == "records") {
    ordered_json j{{"left", letters.format(u)},
                   {"right", letters.format(v)},
                   {"k", k},
                   {"equivalent", equivalent}};
    if (d) j["witness"] = letters.format(*d);
    std::cout << j.dump(2) << "\n";
  } else if (equivalent) {
    std::cout << "equivalent\n";
  } else if (d) {
    std::cout << "distinct; witness " << letters.format(*d) << "\n";
  } else {
    std::cout << "distinct\n";
  }
  return equivalent ? kExitTrue : kExitFalse;
}

int run_check(const std::string& identity_text, const std::string& table_path,
              unsigned stylic_n, const std::string& format,
              const Limits& lim) {
  Identity id = parse_identity(identity_text);
  Alphabet vars = Alphabet::variables(id.variables);
  bool holds = false;
  std::string detail;
  if (!table_path.empty()) {
    MonoidTable tab = parse_table_json(read_file(table_path));
    std::optional<Assignment> bad = counterexample_assignment(id, tab, lim);
    holds = !bad.has_value();
    if (bad) {
      Alphabet gens = Alphabet::generators(std::max<unsigned>(
          1, static_cast<unsigned>(tab.generator_images.size())));
      for (letter_type x = 0; x < id.variables; ++x)
        detail += (x ? " " : "") + vars.name(x) + "->" +
                  gens.format(tab.representatives[(*bad)[x]]);
    }
  } else if (stylic_n > 0) {
    holds = holds_in_stylic(id, stylic_n);
    if (!holds)
      if (auto w = distinguishing_subword(id.lhs, id.rhs, stylic_n))
        detail = "witness " + vars.format(*w);
  } else {
    throw input_error("give either --table FILE or --stylic N");
  }
  if (format == "records") {
    ordered_json j{{"identity", format_identity(id)}, {"holds", holds}};
    if (!detail.empty()) j["detail"] = detail;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (holds ? "holds" : "fails")
              << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  }
  return holds ? kExitTrue : kExitFalse;
}

int run_derive(const std::string& goal_text, const std::string& axioms_path,
               unsigned max_image, const std::string& format,
               const Limits& lim) {
  AxiomSet ax = parse_axioms_text(read_file(axioms_path));
  Identity goal = parse_identity(goal_text);
  Derivation d = bounded_derivation(ax, goal, lim, max_image);
  std::cout << (format == "records" ? derivation_to_json_text(ax, goal, d)
                                    : format_derivation_text(ax, goal, d));
  return d.status == DerivationStatus::derived ? kExitTrue : kExitFalse;
}

int run_verify(const std::string& claim, unsigned n, unsigned vars,
               unsigned len, unsigned threads, std::size_t ceiling,
               const std::string& format, const Limits& lim) {
  Report r;
  if (claim == "lemma1")
    r = verify_lemma1(n, lim);
  else if (claim == "lemma2")
    r = verify_lemma2(n, lim);
  else if (claim == "chain")
    r = verify_surjection_chain(n, lim);
  else if (claim == "theorem")
    r = verify_theorem(n, vars, len, lim, threads, ceiling);
  else if (claim == "corollary2a")
    r = verify_corollary2('a', lim);
  else if (claim == "corollary2b")
    r = verify_corollary2('b', lim);
  else if (claim == "corollary2c")
    r = verify_corollary2c();
  else
    throw input_error("unknown claim: " + claim);
  std::cout << (format == "records" ? report_to_json_text(r)
                                    : format_report(r));
  return r.verdict == Verdict::pass ? kExitTrue : kExitFalse;
}

int run_jtrivial(const Source& src, const std::string& table_path,
                 const std::string& format, const Limits& lim) {
  MonoidTable tab = table_path.empty()
                        ? enumerate(src.load(), lim)
                        : parse_table_json(read_file(table_path));
  bool jt = is_j_trivial(tab);
  if (format == "records") {
    ordered_json j{{"size", tab.size}, {"j_trivial", jt}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (jt ? "j-trivial" : "not j-trivial") << "\n";
  }
  return jt ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stylic, Kiselman and Catalan monoids: enumeration, subword "
               "criterion, identity checking and claim verification"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned threads = 1;
  app.add_option("--format", format, "output form")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--threads", threads, "worker cap for grid checks");

  Source preset_src, enum_src, nf_src, jt_src;
  std::string out_path, engine = "auto";
  std::string word_text, left, right, identity_text, table_path, goal_text,
      axioms_path, claim;
  unsigned k = 2, stylic_n = 0, verify_n = 2, grid_vars = 3, grid_len = 4,
           max_image = 3;
  bool witness = false;
  // Environment variables set the defaults; explicit flags win.
  Limits lim;
  std::size_t ceiling = 4'000'000'000;
  try {
    lim = limits_from_env();
    ceiling = env_override("STYLIC_STEP_CEILING", ceiling);
  } catch (const stylic::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* preset = app.add_subcommand("preset", "emit a preset presentation");
  preset_src.attach(preset);
  preset->add_option("--out", out_path, "write to file");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "build the multiplication table");
  enum_src.attach(enumerate_cmd);
  enumerate_cmd->add_option("--engine", engine, "table engine")
      ->check(CLI::IsMember({"auto", "kb", "closure", "both"}));
  enumerate_cmd->add_option("--out", out_path, "write to file");

  CLI::App* nf = app.add_subcommand("nf", "normal form of a generator word");
  nf_src.attach(nf);
  nf->add_option("word", word_text, "word over a1..an")->required();

  CLI::App* subwords =
      app.add_subcommand("subwords", "scattered subwords up to a length");
  subwords->add_option("word", word_text, "word, single-character letters")
      ->required();
  subwords->add_option("--k", k, "length bound")->required();

  CLI::App* simon =
      app.add_subcommand("simon", "subword equivalence of two words");
  simon->add_option("left", left)->required();
  simon->add_option("right", right)->required();
  simon->add_option("--k", k, "length bound")->required();
  simon->add_flag("--witness", witness, "show a distinguishing subword");

  CLI::App* check = app.add_subcommand("check", "does an identity hold");
  check->add_option("identity", identity_text, "identity word=word")
      ->required();
  check->add_option("--table", table_path, "table file");
  check->add_option("--stylic", stylic_n, "rank for the subword criterion");

  CLI::App* derive =
      app.add_subcommand("derive", "bounded derivation from axioms");
  derive->add_option("goal", goal_text, "identity word=word")->required();
  derive->add_option("--axioms", axioms_path, "axiom file, one identity per line")
      ->required();
  derive->add_option("--max-image", max_image, "substitution image cap");

  CLI::App* verify = app.add_subcommand("verify", "check one claim");
  verify
      ->add_option("claim", claim,
                   "lemma1|lemma2|chain|theorem|corollary2a|corollary2b|"
                   "corollary2c")
      ->required();
  verify->add_option("--n", verify_n, "rank");
  verify->add_option("--vars", grid_vars, "grid variable count");
  verify->add_option("--len", grid_len, "grid length bound");
  verify->add_option("--ceiling", ceiling, "step ceiling for grid checks");

  CLI::App* jtrivial = app.add_subcommand("jtrivial", "principal-ideal test");
  jt_src.attach(jtrivial);
  jtrivial->add_option("--table", table_path, "table file");

  try {
    app.parse(argc, argv);

    if (preset->parsed()) return run_preset(preset_src, format, out_path);
    if (enumerate_cmd->parsed())
      return run_enumerate(enum_src, engine, format, out_path, lim);
    if (nf->parsed()) return run_nf(nf_src, word_text, format, lim);
    if (subwords->parsed()) return run_subwords(word_text, k, format);
    if (simon->parsed()) return run_simon(left, right, k, witness, format);
    if (check->parsed())
      return run_check(identity_text, table_path, stylic_n, format, lim);
    if (derive->parsed())
      return run_derive(goal_text, axioms_path, max_image, format, lim);
    if (verify->parsed())
      return run_verify(claim, verify_n, grid_vars, grid_len, threads, ceiling,
                        format, lim);
    if (jtrivial->parsed())
      return run_jtrivial(jt_src, table_path, format, lim);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const stylic::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const stylic::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
}
