#include "stylic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "stylic/derivation.hpp"
#include "stylic/enumerate.hpp"
#include "stylic/errors.hpp"
#include "stylic/identity.hpp"
#include "stylic/presentation.hpp"

namespace stylic {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_checkable: return "not-checkable";
  }
  return "?";
}

std::string format_report(const Report& r) {
  std::string out = "claim: " + r.claim + "\n";
  if (!r.params.empty()) {
    out += "params:";
    for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
    out += "\n";
  }
  out += "verdict: ";
  out += to_string(r.verdict);
  out += "\n";
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    out += "counterexample: [" + c.kind + "] " + c.lhs + " = " + c.rhs;
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
  }
  for (const auto& [k, v] : r.stats) out += "stat: " + k + "=" + v + "\n";
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  return out;
}

namespace {

// Table workflows stay at desk scale; larger ranks need different tooling.
void guard_rank(unsigned n) {
  if (n < 1 || n > 4)
    throw input_error("rank must be between 1 and 4 for table workflows");
}

std::string size_str(std::size_t v) { return std::to_string(v); }

// First relation of p whose sides evaluate differently in t under the
// generator-fixing map, if any.
std::optional<Counterexample> relations_violated(
    const Presentation& p, const MonoidTable& t, std::size_t first,
    const std::string& where) {
  Alphabet gens = Alphabet::generators(p.generators);
  for (std::size_t i = first; i < p.relations.size(); ++i) {
    const auto& [lhs, rhs] = p.relations[i];
    if (t.evaluate_word(lhs) != t.evaluate_word(rhs))
      return Counterexample{"relation", gens.format(lhs), gens.format(rhs),
                            "sides evaluate differently in " + where};
  }
  return std::nullopt;
}

}  // namespace

Report verify_lemma1(unsigned n, const Limits& lim) {
  guard_rank(n);
  Report r;
  r.claim = "lemma1";
  r.params = {{"n", size_str(n)}};

  MonoidTable styl = enumerate(stylic_presentation(n), lim);
  Presentation kis = kiselman_presentation(n);
  r.stats = {{"relations_checked", size_str(kis.relations.size())},
             {"stylic_size", size_str(styl.size)}};
  if (auto c = relations_violated(kis, styl, 0, "the stylic table")) {
    r.counterexample = std::move(c);
    return r;
  }
  r.verdict = Verdict::pass;
  return r;
}

Report verify_lemma2(unsigned n, const Limits& lim) {
  guard_rank(n);
  Report r;
  r.claim = "lemma2";
  r.params = {{"n", size_str(n)}};

  MonoidTable cat = enumerate(catalan_presentation(n), lim);
  MonoidTable model = catalan_transformation_monoid(n);
  Presentation styl = stylic_presentation(n);
  std::size_t first = styl.idempotent_count();
  r.stats = {{"relations_checked", size_str(styl.relations.size() - first)},
             {"catalan_size", size_str(cat.size)},
             {"model_size", size_str(model.size)}};
  if (auto c = relations_violated(styl, cat, first, "the Catalan table")) {
    r.counterexample = std::move(c);
    return r;
  }
  if (auto c = relations_violated(styl, model, first,
                                  "the transformation model")) {
    r.counterexample = std::move(c);
    return r;
  }
  r.verdict = Verdict::pass;
  return r;
}

Report verify_surjection_chain(unsigned n, const Limits& lim) {
  guard_rank(n);
  Report r;
  r.claim = "chain";
  r.params = {{"n", size_str(n)}};

  MonoidTable kis = enumerate(kiselman_presentation(n), lim);
  MonoidTable styl = enumerate(stylic_presentation(n), lim);
  MonoidTable cat = enumerate(catalan_presentation(n), lim);
  r.stats = {{"kiselman_size", size_str(kis.size)},
             {"stylic_size", size_str(styl.size)},
             {"catalan_size", size_str(cat.size)}};

  if (auto c = relations_violated(kiselman_presentation(n), styl, 0,
                                  "the stylic table")) {
    r.counterexample = std::move(c);
    return r;
  }
  if (auto c = relations_violated(stylic_presentation(n), cat, 0,
                                  "the Catalan table")) {
    r.counterexample = std::move(c);
    return r;
  }
  if (kis.size < styl.size || styl.size < cat.size) {
    r.counterexample = Counterexample{
        "sizes", size_str(kis.size), size_str(cat.size),
        "sizes do not decrease along the generator-fixing maps"};
    return r;
  }
  r.verdict = Verdict::pass;
  return r;
}

Report verify_theorem(unsigned n, unsigned max_vars, unsigned max_len,
                      const Limits& lim, unsigned threads,
                      std::size_t step_ceiling) {
  guard_rank(n);
  if (max_vars < 1 || max_vars > 6)
    throw input_error("variable count must be between 1 and 6");
  if (max_len < 1) throw input_error("length bound must be positive");
  if (threads < 1) threads = 1;

  Report r;
  r.claim = "theorem";
  r.params = {{"n", size_str(n)},
              {"vars", size_str(max_vars)},
              {"len", size_str(max_len)}};

  MonoidTable kis = enumerate(kiselman_presentation(n), lim);
  MonoidTable styl = enumerate(stylic_presentation(n), lim);
  MonoidTable cat = enumerate(catalan_presentation(n), lim);

  // Projected cost, checked before any pair is evaluated:
  //   W     = sum of max_vars^l for l = 0..max_len   (grid words)
  //   P     = W(W-1)/2                               (unordered pairs)
  //   per pair: 2*max_len*(K^V + S^V + C^V) table evaluations plus
  //             (max_len+1)^2*(n+1) criterion steps.
  double W = 0, pw = 1;
  for (unsigned l = 0; l <= max_len; ++l, pw *= max_vars) W += pw;
  double P = W * (W - 1) / 2;
  double per_table = std::pow(double(kis.size), max_vars) +
                     std::pow(double(styl.size), max_vars) +
                     std::pow(double(cat.size), max_vars);
  double per_pair = 2.0 * max_len * per_table +
                    double(max_len + 1) * (max_len + 1) * (n + 1);
  double predicted = P * per_pair;
  if (predicted > double(step_ceiling))
    throw resource_error(
        "identity grid needs about " + std::to_string(predicted) +
        " steps (pairs " + std::to_string(P) + " x cost " +
        std::to_string(per_pair) + " per pair), over the ceiling of " +
        std::to_string(step_ceiling));

  std::vector<word_type> words;
  words.reserve(static_cast<std::size_t>(W));
  words.push_back({});
  for (std::size_t at = 0; at < words.size(); ++at) {
    if (words[at].size() == max_len) continue;
    word_type w = words[at];
    w.push_back(0);
    for (letter_type a = 0; a < max_vars; ++a) {
      w.back() = a;
      // levels fill in shortlex order because parents are already sorted
      words.push_back(w);
    }
  }

  struct Hit {
    std::size_t i = 0, j = 0;
    bool criterion = false, in_kis = false, in_styl = false, in_cat = false;
  };
  std::vector<std::optional<Hit>> best(threads);
  std::vector<std::size_t> disagreements(threads, 0);

  auto scan = [&](unsigned tid) {
    for (std::size_t i = tid; i < words.size(); i += threads)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        Identity id{words[i], words[j], max_vars};
        bool criterion = holds_in_stylic(id, n);
        bool in_kis = holds_in_table(id, kis, lim);
        bool in_styl = holds_in_table(id, styl, lim);
        bool in_cat = holds_in_table(id, cat, lim);
        if (criterion != in_kis || criterion != in_styl ||
            criterion != in_cat) {
          ++disagreements[tid];
          if (!best[tid] || std::pair(i, j) < std::pair(best[tid]->i,
                                                        best[tid]->j))
            best[tid] = Hit{i, j, criterion, in_kis, in_styl, in_cat};
        }
      }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    for (std::thread& t : pool) t.join();
  }

  std::optional<Hit> worst;
  std::size_t total = 0;
  for (unsigned t = 0; t < threads; ++t) {
    total += disagreements[t];
    if (best[t] && (!worst || std::pair(best[t]->i, best[t]->j) <
                                  std::pair(worst->i, worst->j)))
      worst = best[t];
  }

  r.stats = {{"words", size_str(words.size())},
             {"pairs", size_str(words.size() * (words.size() - 1) / 2)},
             {"disagreements", size_str(total)},
             {"kiselman_size", size_str(kis.size)},
             {"stylic_size", size_str(styl.size)},
             {"catalan_size", size_str(cat.size)}};

  if (worst) {
    Identity id{words[worst->i], words[worst->j], max_vars};
    auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
    Alphabet vars = Alphabet::variables(max_vars);
    r.counterexample = Counterexample{
        "identity", vars.format(id.lhs), vars.format(id.rhs),
        "criterion=" + yn(worst->criterion) + " kiselman=" +
            yn(worst->in_kis) + " stylic=" + yn(worst->in_styl) +
            " catalan=" + yn(worst->in_cat)};
    return r;
  }
  r.verdict = Verdict::pass;
  return r;
}

Report verify_corollary2(char part, const Limits& lim) {
  if (part != 'a' && part != 'b')
    throw input_error("part must be 'a' or 'b'");
  const unsigned n = part == 'a' ? 2 : 3;

  Report r;
  r.claim = std::string("corollary2") + part;
  r.params = {{"n", size_str(n)}};

  AxiomSet basis = stylic_basis(n);
  MonoidTable styl = enumerate(stylic_presentation(n), lim);

  for (const Identity& id : basis.axioms) {
    bool by_criterion = holds_in_stylic(id, n);
    bool by_table = holds_in_table(id, styl, lim);
    if (!by_criterion || !by_table) {
      Alphabet vars = Alphabet::variables(id.variables);
      r.counterexample = Counterexample{
          "identity", vars.format(id.lhs), vars.format(id.rhs),
          std::string("basis identity fails by ") +
              (by_criterion ? "table evaluation" : "the subword criterion")};
      return r;
    }
  }

  // Separation probe: the n=2 basis member xyxzx=xyzx must stop holding one
  // rank up, with xxx as the shortest witness subword.
  Identity probe = parse_identity("xyxzx=xyzx");
  bool at2 = holds_in_stylic(probe, 2);
  bool at3 = holds_in_stylic(probe, 3);
  std::optional<word_type> witness =
      distinguishing_subword(probe.lhs, probe.rhs, 3);
  std::string witness_text =
      witness ? Alphabet::variables(probe.variables).format(*witness)
              : std::string("none");
  if (!at2 || at3 || witness_text != "xxx") {
    r.counterexample =
        Counterexample{"identity", "xyxzx", "xyzx",
                       "separation probe: holds(n=2)=" +
                           std::string(at2 ? "true" : "false") +
                           " holds(n=3)=" + (at3 ? "true" : "false") +
                           " witness=" + witness_text};
    return r;
  }

  // Smoke set: fixed consequences the bounded search should rediscover.
  // Counts are informational; Unknown is not a failure.
  std::vector<std::string> smoke =
      part == 'a' ? std::vector<std::string>{"x=x", "xyxyx=xyyx",
                                             "yxyxy=yxxy", "xyxy=yxyx"}
                  : std::vector<std::string>{"x=x", "xyxxzx=xyxzx",
                                             "yxyyzy=yxyzy",
                                             "xyxyxy=yxyxyx"};
  Limits smoke_lim = lim;
  smoke_lim.max_word_length = 12;
  smoke_lim.max_steps = 20'000;
  std::size_t derived = 0;
  for (const std::string& text : smoke) {
    Derivation d = bounded_derivation(basis, parse_identity(text), smoke_lim);
    if (d.status == DerivationStatus::derived) ++derived;
  }

  r.stats = {{"basis_size", size_str(basis.axioms.size())},
             {"stylic_size", size_str(styl.size)},
             {"probe_witness", witness_text},
             {"smoke_derived",
              size_str(derived) + "/" + size_str(smoke.size())}};
  r.verdict = Verdict::pass;
  return r;
}

Report verify_corollary2c() {
  Report r;
  r.claim = "corollary2c";
  r.verdict = Verdict::not_checkable;
  r.notes = {
      "the claim quantifies over all finite axiom sets for ranks >= 4;",
      "no terminating desk-scale computation decides it, so this workflow "
      "reports the claim as out of scope rather than passing vacuously"};
  return r;
}

}  // namespace stylic
