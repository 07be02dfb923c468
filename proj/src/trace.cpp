#include "tracta/trace.hpp"

#include <algorithm>

namespace tracta {

FoataWord::FoataWord(AlphabetRef alpha, std::vector<StepMask> steps)
    : alpha_(std::move(alpha)), steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == 0) throw InvariantError("empty step in Foata word");
    if (!alpha_->valid_step(steps_[i]))
      throw InvariantError("step " + alpha_->render_step(steps_[i]) +
                           " has dependent letters");
    if (i > 0 && !alpha_->chained(steps_[i - 1], steps_[i]))
      throw InvariantError("steps " + alpha_->render_step(steps_[i - 1]) + " and " +
                           alpha_->render_step(steps_[i]) + " are not ▷-chained");
  }
}

std::size_t FoataWord::letter_count() const {
  std::size_t n = 0;
  for (StepMask m : steps_) n += static_cast<std::size_t>(popcount(m));
  return n;
}

std::vector<Letter> FoataWord::linearization() const {
  std::vector<Letter> out;
  out.reserve(letter_count());
  for (StepMask m : steps_) for_each_letter(m, [&](Letter a) { out.push_back(a); });
  return out;
}

std::string FoataWord::render() const {
  if (steps_.empty()) return "ε";
  std::string out;
  for (StepMask m : steps_) out += alpha_->render_step(m);
  return out;
}

FoataWord foata_normalize(const AlphabetRef& alpha, const std::vector<Letter>& word) {
  std::vector<int> last_level(alpha->size(), 0);
  std::vector<StepMask> steps;
  for (Letter a : word) {
    int lvl = 0;
    for_each_letter(alpha->dep_mask(a),
                    [&](Letter b) { lvl = std::max(lvl, last_level[b]); });
    ++lvl;
    last_level[a] = lvl;
    if (static_cast<int>(steps.size()) < lvl) steps.resize(static_cast<std::size_t>(lvl), 0);
    steps[static_cast<std::size_t>(lvl - 1)] |= bit(a);
  }
  return FoataWord(alpha, std::move(steps));
}

FoataWord foata_normalize(const AlphabetRef& alpha, std::string_view text) {
  return foata_normalize(alpha, alpha->parse_word(text));
}

bool trace_equiv(const AlphabetRef& alpha, const std::vector<Letter>& u,
                 const std::vector<Letter>& v) {
  return foata_normalize(alpha, u) == foata_normalize(alpha, v);
}

FoataWord concat(const FoataWord& s, const FoataWord& t) {
  if (!same_alphabet(s.alphabet(), t.alphabet()))
    throw InvariantError("concat over distinct alphabets");
  std::vector<Letter> w = s.linearization();
  std::vector<Letter> wt = t.linearization();
  w.insert(w.end(), wt.begin(), wt.end());
  return foata_normalize(s.alphabet(), w);
}

namespace {

// [a]⁻¹t for a in the first step of t.
FoataWord remove_minimal(const FoataWord& t, Letter a) {
  std::vector<StepMask> steps = t.steps();
  steps[0] = static_cast<StepMask>(steps[0] & ~bit(a));
  std::vector<Letter> w;
  for (StepMask m : steps) for_each_letter(m, [&](Letter b) { w.push_back(b); });
  return foata_normalize(t.alphabet(), w);
}

}  // namespace

std::optional<FoataWord> left_divide(const FoataWord& prefix, const FoataWord& whole) {
  if (!same_alphabet(prefix.alphabet(), whole.alphabet()))
    throw InvariantError("left_divide over distinct alphabets");
  FoataWord q = whole;
  // A letter is minimal in q exactly when it belongs to the first step, so
  // prefixes strip off letter by letter.
  for (Letter a : prefix.linearization()) {
    if (q.empty() || !(q.steps()[0] & bit(a))) return std::nullopt;
    q = remove_minimal(q, a);
  }
  return q;
}

bool prefix_le(const FoataWord& prefix, const FoataWord& whole) {
  return left_divide(prefix, whole).has_value();
}

StepMask maximal_letters(const FoataWord& t) {
  // Position j is maximal iff no later occurrence depends on a_j; scanning
  // right-to-left with a seen-letters mask decides that, and maximal
  // positions carry pairwise distinct letters.
  std::vector<Letter> w = t.linearization();
  StepMask seen = 0, maximal = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!(t.alphabet()->dep_mask(*it) & seen)) maximal |= bit(*it);
    seen |= bit(*it);
  }
  return maximal;
}

bool is_prime(const FoataWord& t) {
  return !t.empty() && popcount(maximal_letters(t)) == 1;
}

}  // namespace tracta
