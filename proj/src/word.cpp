#include "stylic/word.hpp"

#include <algorithm>
#include <set>

#include "stylic/errors.hpp"

namespace stylic {

bool shortlex_less(const word_type& a, const word_type& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Alphabet::Alphabet(unsigned size, std::vector<std::string> names)
    : names_(std::move(names)) {
  if (size < 1) throw input_error("alphabet size must be at least 1");
  if (names_.size() != size)
    throw input_error("alphabet needs exactly one name per letter");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n == "1" || n.find('.') != std::string::npos ||
        n.find('=') != std::string::npos)
      throw input_error("invalid letter name '" + n + "'");
    if (!seen.insert(n).second)
      throw input_error("duplicate letter name '" + n + "'");
  }
  single_char_ = std::all_of(names_.begin(), names_.end(),
                             [](const std::string& n) { return n.size() == 1; });
}

Alphabet::Alphabet(unsigned size)
    : Alphabet(size, [size] {
        std::vector<std::string> names;
        for (unsigned i = 0; i < size; ++i)
          names.push_back("g" + std::to_string(i + 1));
        return names;
      }()) {}

Alphabet Alphabet::generators(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return Alphabet(n, std::move(names));
}

Alphabet Alphabet::variables(unsigned n) {
  static const char* pool[] = {"x", "y", "z", "t", "u", "v"};
  if (n < 1 || n > 6)
    throw input_error("variable alphabets range over x,y,z,t,u,v (1..6 letters)");
  return Alphabet(n, std::vector<std::string>(pool, pool + n));
}

void Alphabet::validate(const word_type& w) const {
  for (letter_type a : w)
    if (a >= size())
      throw input_error("letter index " + std::to_string(a) +
                        " out of range for alphabet of size " +
                        std::to_string(size()));
}

std::string Alphabet::format(const word_type& w) const {
  validate(w);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) out += '.';
    out += names_[w[i]];
  }
  return out;
}

word_type Alphabet::parse(std::string_view text) const {
  if (text == "1") return {};
  if (text.empty()) throw input_error("empty word text (use \"1\" for the empty word)");
  word_type w;
  auto letter_of = [this](std::string_view tok) -> letter_type {
    for (unsigned i = 0; i < size(); ++i)
      if (names_[i] == tok) return i;
    throw input_error("unknown letter '" + std::string(tok) + "'");
  };
  if (single_char_) {
    for (char c : text) w.push_back(letter_of(std::string_view(&c, 1)));
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      std::string_view tok = text.substr(
          start, dot == std::string_view::npos ? text.size() - start : dot - start);
      w.push_back(letter_of(tok));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  return w;
}

bool SubwordSet::contains(const word_type& w) const {
  return std::binary_search(members.begin(), members.end(), w, shortlex_less);
}

bool is_subword(const word_type& p, const word_type& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < p.size(); ++j)
    if (w[j] == p[i]) ++i;
  return i == p.size();
}

namespace {

constexpr std::size_t k_none = static_cast<std::size_t>(-1);

// next[i][c] = least j >= i with w[j] == c, or k_none.  Row |w| is all-none.
std::vector<std::vector<std::size_t>> next_occurrence(const word_type& w,
                                                      unsigned alphabet) {
  std::vector<std::vector<std::size_t>> next(
      w.size() + 1, std::vector<std::size_t>(alphabet, k_none));
  for (std::size_t i = w.size(); i-- > 0;) {
    next[i] = next[i + 1];
    next[i][w[i]] = i;
  }
  return next;
}

unsigned letter_span(const word_type& w) {
  letter_type m = 0;
  for (letter_type a : w) m = std::max(m, a);
  return w.empty() ? 0 : m + 1;
}

}  // namespace

SubwordSet subwords_up_to(const word_type& w, unsigned k) {
  // Walk the subsequence automaton (state = number of consumed text letters);
  // greedy embeddings make every distinct subword correspond to exactly one
  // path, and expanding a shortlex-sorted level by ascending letters keeps
  // each level sorted.
  const unsigned alphabet = letter_span(w);
  const auto next = next_occurrence(w, alphabet);

  SubwordSet out;
  out.bound = k;
  out.members.push_back({});

  std::vector<std::pair<word_type, std::size_t>> level = {{{}, 0}};
  for (unsigned len = 1; len <= k && !level.empty(); ++len) {
    std::vector<std::pair<word_type, std::size_t>> nxt;
    for (const auto& [u, pos] : level) {
      for (unsigned c = 0; c < alphabet; ++c) {
        std::size_t j = next[pos][c];
        if (j == k_none) continue;
        word_type uc = u;
        uc.push_back(c);
        nxt.emplace_back(std::move(uc), j + 1);
      }
    }
    for (const auto& [u, pos] : nxt) out.members.push_back(u);
    level = std::move(nxt);
  }
  return out;
}

bool simon_equivalent(const word_type& u, const word_type& v, unsigned k) {
  const unsigned alphabet = std::max(letter_span(u), letter_span(v));
  if (alphabet == 0) return true;
  const auto next_u = next_occurrence(u, alphabet);
  const auto next_v = next_occurrence(v, alphabet);

  // eq(i, j, l): the suffixes u[i..] and v[j..] admit the same scattered
  // subwords of length <= l.  Split by first letter: both suffixes must
  // contain the same letters, and for each shared letter the suffixes past
  // its first occurrences must agree one level down.
  const std::size_t nu = u.size() + 1, nv = v.size() + 1;
  // 0 = unknown, 1 = false, 2 = true
  std::vector<unsigned char> memo(nu * nv * (k + 1), 0);
  auto eq = [&](auto&& self, std::size_t i, std::size_t j, unsigned l) -> bool {
    if (l == 0) return true;
    unsigned char& m = memo[(i * nv + j) * (k + 1) + l];
    if (m) return m == 2;
    bool ok = true;
    for (unsigned c = 0; c < alphabet && ok; ++c) {
      std::size_t pu = next_u[i][c], pv = next_v[j][c];
      if ((pu == k_none) != (pv == k_none))
        ok = false;
      else if (pu != k_none)
        ok = self(self, pu + 1, pv + 1, l - 1);
    }
    m = ok ? 2 : 1;
    return ok;
  };
  return eq(eq, 0, 0, k);
}

std::optional<word_type> distinguishing_subword(const word_type& u,
                                                const word_type& v, unsigned k) {
  if (simon_equivalent(u, v, k)) return std::nullopt;
  SubwordSet a = subwords_up_to(u, k);
  SubwordSet b = subwords_up_to(v, k);
  std::vector<word_type> diff;
  std::set_symmetric_difference(a.members.begin(), a.members.end(),
                                b.members.begin(), b.members.end(),
                                std::back_inserter(diff), shortlex_less);
  // diff is shortlex-sorted, so the front is the shortest witness with the
  // lexicographically least tie-break.
  return diff.front();
}

}  // namespace stylic
