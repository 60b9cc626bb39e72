#include "stylic/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stylic/errors.hpp"

namespace stylic {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json word_to_indices(const word_type& w) {
  ordered_json out = ordered_json::array();
  for (letter_type a : w) out.push_back(a + 1);  // 1-based on disk
  return out;
}

word_type word_from_indices(const ordered_json& j, unsigned generators) {
  if (!j.is_array()) throw input_error("a word must be a list of indices");
  word_type w;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() < 1 ||
        e.get<std::size_t>() > generators)
      throw input_error("generator index out of range in word");
    w.push_back(static_cast<letter_type>(e.get<std::size_t>() - 1));
  }
  return w;
}

ordered_json parse_or_throw(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON input");
  return j;
}

}  // namespace

std::string presentation_to_json_text(const Presentation& p) {
  ordered_json j;
  j["generators"] = p.generators;
  j["relations"] = ordered_json::array();
  for (const auto& [lhs, rhs] : p.relations)
    j["relations"].push_back({word_to_indices(lhs), word_to_indices(rhs)});
  return j.dump(2) + "\n";
}

Presentation parse_presentation_json(std::string_view text) {
  ordered_json j = parse_or_throw(text);
  try {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relations"))
      throw input_error("presentation needs generators and relations fields");
    if (!j["generators"].is_number_unsigned())
      throw input_error("generators must be a non-negative integer");
    Presentation p;
    p.generators = j["generators"].get<unsigned>();
    for (const auto& rel : j["relations"]) {
      if (!rel.is_array() || rel.size() != 2)
        throw input_error("each relation must pair exactly two words");
      p.relations.emplace_back(word_from_indices(rel[0], p.generators),
                               word_from_indices(rel[1], p.generators));
    }
    p.validate();
    return p;
  } catch (const ordered_json::exception& e) {
    throw input_error(std::string("malformed presentation: ") + e.what());
  }
}

std::string table_to_json_text(const MonoidTable& t) {
  // A generator-free table only ever formats the empty word; any non-empty
  // alphabet serves for that.
  Alphabet gens = Alphabet::generators(
      std::max<unsigned>(1, static_cast<unsigned>(t.generator_images.size())));
  ordered_json j;
  j["size"] = t.size;
  j["generators"] = t.generator_images;
  j["table"] = t.table;
  j["representatives"] = ordered_json::array();
  for (const word_type& w : t.representatives)
    j["representatives"].push_back(gens.format(w));
  j["engine"] = t.engine;
  return j.dump(2) + "\n";
}

MonoidTable parse_table_json(std::string_view text) {
  ordered_json j = parse_or_throw(text);
  try {
    for (const char* field : {"size", "generators", "table", "representatives"})
      if (!j.is_object() || !j.contains(field))
        throw input_error(std::string("table is missing the ") + field +
                          " field");
    MonoidTable t;
    if (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() == 0)
      throw input_error("table size must be a positive integer");
    t.size = j["size"].get<std::size_t>();
    t.generator_images = j["generators"].get<std::vector<std::size_t>>();
    t.table = j["table"].get<std::vector<std::size_t>>();
    Alphabet gens = Alphabet::generators(std::max<unsigned>(
        1, static_cast<unsigned>(t.generator_images.size())));
    for (const auto& e : j["representatives"]) {
      if (!e.is_string()) throw input_error("representatives must be words");
      t.representatives.push_back(gens.parse(e.get<std::string>()));
    }
    t.engine = "import";
    t.validate();
    return t;
  } catch (const ordered_json::exception& e) {
    throw input_error(std::string("malformed table: ") + e.what());
  }
}

std::string report_to_json_text(const Report& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["verdict"] = to_string(r.verdict);
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    j["counterexample"] = {{"kind", c.kind},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"detail", c.detail}};
  }
  j["stats"] = ordered_json::object();
  for (const auto& [k, v] : r.stats) j["stats"][k] = v;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

namespace {

ordered_json step_to_json(const DerivationStep& s, std::size_t index) {
  Alphabet vars = Alphabet::variables(6);
  ordered_json sub = ordered_json::object();
  for (std::size_t v = 0; v < s.substitution.size(); ++v)
    sub[vars.name(static_cast<letter_type>(v))] =
        vars.format(s.substitution[v]);
  return {{"index", index},
          {"position", s.position},
          {"axiom", s.axiom},
          {"direction", s.reversed ? "reversed" : "forward"},
          {"substitution", sub}};
}

}  // namespace

std::string derivation_to_json_text(const AxiomSet& ax, const Identity& goal,
                                    const Derivation& d) {
  ordered_json j;
  j["goal"] = format_identity(goal);
  j["axioms"] = ordered_json::array();
  for (const Identity& a : ax.axioms) j["axioms"].push_back(format_identity(a));
  j["status"] =
      d.status == DerivationStatus::derived ? "derived" : "unknown";
  j["explored"] = d.explored;
  j["steps"] = ordered_json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i)
    j["steps"].push_back(step_to_json(d.steps[i], i + 1));
  return j.dump(2) + "\n";
}

std::string format_derivation_text(const AxiomSet& ax, const Identity& goal,
                                   const Derivation& d) {
  std::ostringstream out;
  out << "goal: " << format_identity(goal) << "\n";
  if (d.status != DerivationStatus::derived) {
    out << "status: unknown (bounded search exhausted, " << d.explored
        << " words explored)\n";
    return out.str();
  }
  out << "status: derived in " << d.steps.size() << " step"
      << (d.steps.size() == 1 ? "" : "s") << "\n";
  Alphabet vars = Alphabet::variables(6);
  word_type w = goal.lhs;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& s = d.steps[i];
    w = apply_step(ax, w, s);
    out << "  " << i + 1 << ". position " << s.position << ", axiom "
        << s.axiom << " (" << format_identity(ax.axioms[s.axiom]) << ") "
        << (s.reversed ? "reversed" : "forward") << ", substitution";
    for (std::size_t v = 0; v < s.substitution.size(); ++v)
      out << " " << vars.name(static_cast<letter_type>(v)) << "->"
          << vars.format(s.substitution[v]);
    out << " => " << vars.format(w) << "\n";
  }
  return out.str();
}

AxiomSet parse_axioms_text(std::string_view text) {
  AxiomSet ax;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    ax.axioms.push_back(parse_identity(line.substr(begin, end - begin + 1)));
  }
  if (ax.axioms.empty()) throw input_error("axiom file holds no identities");
  return ax;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

}  // namespace stylic
