#include "tracta/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

namespace tracta {

const Limits& Limits::defaults() {
  static const Limits limits = [] {
    Limits l;
    if (const char* s = std::getenv("TRACTA_STATE_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) l.state_budget = static_cast<std::size_t>(v);
    }
    if (const char* s = std::getenv("TRACTA_MAX_LETTERS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) l.max_letters = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return limits;
}

DependenceAlphabet::DependenceAlphabet(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& independent,
    std::size_t max_letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvariantError("alphabet must have at least one letter");
  std::size_t cap = std::min(max_letters, kHardMaxLetters);
  if (letters_.size() > cap)
    throw ResourceError("alphabet has " + std::to_string(letters_.size()) +
                        " letters, cap is " + std::to_string(cap) +
                        " (raise TRACTA_MAX_LETTERS to override)");
  std::set<std::string> seen;
  for (const auto& s : letters_) {
    if (s.empty()) throw InvariantError("empty letter name");
    if (s == "#") throw InvariantError("'#' is reserved for padding");
    if (!seen.insert(s).second) throw InvariantError("duplicate letter '" + s + "'");
  }

  std::size_t n = letters_.size();
  // Start fully dependent, remove the listed independent pairs.
  dep_.assign(n, 0);
  for (Letter a = 0; a < n; ++a) dep_[a] = all_mask();
  for (const auto& [x, y] : independent) {
    Letter a = letter(x), b = letter(y);
    if (a == b)
      throw InvariantError("letter '" + x + "' cannot be independent of itself");
    dep_[a] = static_cast<StepMask>(dep_[a] & ~bit(b));
    dep_[b] = static_cast<StepMask>(dep_[b] & ~bit(a));
  }

  rank_.assign(std::size_t{1} << n, 0);
  for (StepMask m = 1; m < (StepMask{1} << n); ++m) {
    bool ok = true;
    StepMask rest = m;
    while (rest && ok) {
      Letter a = static_cast<Letter>(__builtin_ctz(rest));
      rest = static_cast<StepMask>(rest & (rest - 1));
      if (dep_[a] & rest) ok = false;  // a dependent on a later member
    }
    if (ok) {
      steps_.push_back(m);
      rank_[m] = static_cast<int>(steps_.size());
    }
  }
}

std::optional<Letter> DependenceAlphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter DependenceAlphabet::letter(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw ParseError("unknown letter '" + std::string(name) + "'");
}

StepMask DependenceAlphabet::dependents_of(StepMask m) const {
  StepMask out = 0;
  for_each_letter(m, [&](Letter a) { out |= dep_[a]; });
  return out;
}

std::vector<Letter> DependenceAlphabet::parse_word(std::string_view text) const {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    // Greedy longest match against the letter names.
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const std::string& nm = letters_[k];
      if (nm.size() > best_len && text.compare(i, nm.size(), nm) == 0) {
        best_len = nm.size();
        best = static_cast<Letter>(k);
      }
    }
    if (best_len == 0)
      throw ParseError("cannot tokenize '" + std::string(text.substr(i)) +
                       "' over alphabet " + render_step(all_mask()));
    out.push_back(best);
    i += best_len;
  }
  return out;
}

std::string DependenceAlphabet::render_word(const std::vector<Letter>& w) const {
  std::string out;
  for (Letter a : w) out += letters_[a];
  return out;
}

std::string DependenceAlphabet::render_step(StepMask m) const {
  std::string out = "{";
  bool first = true;
  for_each_letter(m, [&](Letter a) {
    if (!first) out += ",";
    first = false;
    out += letters_[a];
  });
  out += "}";
  return out;
}

std::vector<std::pair<Letter, Letter>> DependenceAlphabet::independent_pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a = 0; a < size(); ++a)
    for (Letter b = static_cast<Letter>(a + 1); b < size(); ++b)
      if (independent(a, b)) out.emplace_back(a, b);
  return out;
}

AlphabetRef make_alphabet(std::vector<std::string> letters,
                          const std::vector<std::pair<std::string, std::string>>& independent,
                          std::size_t max_letters) {
  return std::make_shared<const DependenceAlphabet>(std::move(letters), independent, max_letters);
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace tracta
