#include "stylic/identity.hpp"

#include <algorithm>
#include <string>

#include "stylic/errors.hpp"

namespace stylic {

void Identity::validate() const {
  if (variables < 1 || variables > 6)
    throw input_error("identity must use between 1 and 6 variables");
  Alphabet vars = Alphabet::variables(variables);
  vars.validate(lhs);
  vars.validate(rhs);
}

AxiomSet stylic_basis(unsigned n) {
  if (n == 2)
    return {{parse_identity("xyxzx=xyzx"), parse_identity("xyxy=yxyx")}};
  if (n == 3)
    return {{parse_identity("xyxxzx=xyxzx"), parse_identity("xyzxxtz=xyxzxxtz"),
             parse_identity("zyxxztx=zyxxzxtx"),
             parse_identity("xyxyxy=yxyxyx")}};
  throw input_error("no finite basis is provided for n = " + std::to_string(n));
}

Identity parse_identity(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw input_error("identity syntax is word=word: " + std::string(text));
  Alphabet vars = Alphabet::variables(6);
  Identity id;
  id.lhs = vars.parse(text.substr(0, eq));
  id.rhs = vars.parse(text.substr(eq + 1));
  letter_type top = 0;
  for (letter_type a : id.lhs) top = std::max(top, a + 1);
  for (letter_type a : id.rhs) top = std::max(top, a + 1);
  if (top == 0) throw input_error("identity must mention a variable");
  id.variables = top;
  return id;
}

std::string format_identity(const Identity& id) {
  Alphabet vars = Alphabet::variables(id.variables);
  return vars.format(id.lhs) + "=" + vars.format(id.rhs);
}

namespace {

std::vector<letter_type> used_variables(const Identity& id) {
  std::vector<bool> seen(id.variables, false);
  for (letter_type a : id.lhs) seen[a] = true;
  for (letter_type a : id.rhs) seen[a] = true;
  std::vector<letter_type> used;
  for (letter_type v = 0; v < id.variables; ++v)
    if (seen[v]) used.push_back(v);
  return used;
}

}  // namespace

std::optional<Assignment> counterexample_assignment(const Identity& id,
                                                    const MonoidTable& t,
                                                    const Limits& lim) {
  id.validate();
  std::vector<letter_type> used = used_variables(id);

  double projected = static_cast<double>(id.lhs.size() + id.rhs.size());
  for (std::size_t i = 0; i < used.size(); ++i)
    projected *= static_cast<double>(t.size);
  if (projected > static_cast<double>(lim.max_steps))
    throw resource_error("assignment search needs about " +
                         std::to_string(static_cast<unsigned long long>(projected)) +
                         " steps, over the budget of " +
                         std::to_string(lim.max_steps));

  Assignment a(id.variables, 0);
  for (;;) {
    if (t.evaluate(id.lhs, a) != t.evaluate(id.rhs, a)) return a;
    // Mixed-radix increment over the used variables, last one fastest.
    bool carry = true;
    for (std::size_t i = used.size(); carry && i-- > 0;) {
      letter_type v = used[i];
      carry = ++a[v] == t.size;
      if (carry) a[v] = 0;
    }
    if (carry) return std::nullopt;  // wrapped: all assignments visited
  }
}

bool holds_in_table(const Identity& id, const MonoidTable& t,
                    const Limits& lim) {
  return !counterexample_assignment(id, t, lim).has_value();
}

bool holds_in_stylic(const Identity& id, unsigned n) {
  id.validate();
  if (n < 1) throw input_error("stylic rank must be at least 1");
  return simon_equivalent(id.lhs, id.rhs, n);
}

Identity rename_variables(const Identity& id,
                          const std::vector<letter_type>& permutation) {
  id.validate();
  if (permutation.size() != id.variables)
    throw input_error("permutation must cover all variables");
  std::vector<bool> hit(id.variables, false);
  for (letter_type img : permutation) {
    if (img >= id.variables || hit[img])
      throw input_error("variable map is not a bijection");
    hit[img] = true;
  }
  Identity out = id;
  for (letter_type& a : out.lhs) a = permutation[a];
  for (letter_type& a : out.rhs) a = permutation[a];
  return out;
}

}  // namespace stylic
