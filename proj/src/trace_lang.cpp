#include "tracta/trace_lang.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tracta {

Word step_word(const FoataWord& t) {
  Word w;
  w.reserve(t.step_count());
  for (StepMask m : t.steps()) w.push_back(static_cast<Symbol>(m));
  return w;
}

FoataWord from_step_word(const AlphabetRef& alpha, const Word& w) {
  std::vector<StepMask> steps;
  steps.reserve(w.size());
  for (Symbol s : w) steps.push_back(static_cast<StepMask>(s));
  return FoataWord(alpha, std::move(steps));
}

Dfa foata_automaton(const AlphabetRef& alpha) {
  Dfa d(Domain::steps_nonempty(alpha));
  d.add_state(true);  // start: nothing read yet
  for (std::size_t i = 0; i < alpha->steps().size(); ++i) d.add_state(true);
  auto state_of = [&](StepMask m) {
    return static_cast<State>(alpha->step_rank(m) + 1);
  };
  for (StepMask a : alpha->steps()) {
    d.add_arc(0, static_cast<Symbol>(a), state_of(a));
    for (StepMask b : alpha->steps())
      if (alpha->chained(a, b)) d.add_arc(state_of(a), static_cast<Symbol>(b), state_of(b));
  }
  d.initial = 0;
  return d;
}

bool is_trace_closed(const AlphabetRef& alpha, const Dfa& dfa, const Budget& budget) {
  if (dfa.domain != Domain::letters(alpha))
    throw InvariantError("trace closure is asked of a non-letter automaton");
  Dfa m = minimize(dfa, budget);
  auto two = [&](State q, Letter x, Letter y) -> std::optional<State> {
    auto s = m.step(q, static_cast<Symbol>(x));
    if (!s) return std::nullopt;
    return m.step(*s, static_cast<Symbol>(y));
  };
  for (State q = 0; q < m.num_states(); ++q)
    for (auto [a, b] : alpha->independent_pairs())
      if (two(q, a, b) != two(q, b, a)) return false;
  return true;
}

RecTraceLang RecTraceLang::from_dfa(const AlphabetRef& alpha, const Dfa& dfa,
                                    const Budget& budget) {
  if (dfa.domain != Domain::letters(alpha))
    throw InvariantError("trace language wants an automaton over letters");
  Dfa m = minimize(dfa, budget);
  if (!is_trace_closed(alpha, m, budget))
    throw InvariantError("language is not closed under independent commutation");
  return RecTraceLang(alpha, std::move(m));
}

RecTraceLang RecTraceLang::from_finite(const AlphabetRef& alpha,
                                       const std::vector<FoataWord>& traces) {
  std::set<std::vector<Letter>> words;
  for (const FoataWord& t : traces) {
    if (!same_alphabet(t.alphabet(), alpha))
      throw InvariantError("trace over a different alphabet");
    auto base = t.linearization();
    std::vector<std::vector<Letter>> todo{base};
    words.insert(base);
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (alpha->independent(u[i], u[i + 1])) {
          auto v = u;
          std::swap(v[i], v[i + 1]);
          if (words.insert(v).second) todo.push_back(v);
        }
    }
  }
  std::vector<Word> sym;
  sym.reserve(words.size());
  for (const auto& w : words) sym.emplace_back(w.begin(), w.end());
  return RecTraceLang(alpha, word_set_dfa(Domain::letters(alpha), sym));
}

RecTraceLang RecTraceLang::full(const AlphabetRef& alpha) {
  return RecTraceLang(alpha, universal_dfa(Domain::letters(alpha)));
}

RecTraceLang RecTraceLang::empty(const AlphabetRef& alpha) {
  return RecTraceLang(alpha, empty_dfa(Domain::letters(alpha)));
}

bool RecTraceLang::contains(const FoataWord& t) const {
  if (!same_alphabet(t.alphabet(), alpha_))
    throw InvariantError("trace over a different alphabet");
  return contains_word(t.linearization());
}

bool RecTraceLang::contains_word(const std::vector<Letter>& w) const {
  return dfa_.accepts(Word(w.begin(), w.end()));
}

RecTraceLang RecTraceLang::residual(const FoataWord& t) const {
  if (!same_alphabet(t.alphabet(), alpha_))
    throw InvariantError("trace over a different alphabet");
  auto lin = t.linearization();
  auto q = dfa_.run(Word(lin.begin(), lin.end()));
  if (!q) return empty(alpha_);
  Dfa shifted = dfa_;
  shifted.initial = *q;
  return RecTraceLang(alpha_, minimize(shifted));
}

std::vector<RecTraceLang> RecTraceLang::residual_set() const {
  if (is_empty_lang()) return {empty(alpha_)};
  std::vector<RecTraceLang> out;
  bool partial = false;
  // The minimal DFA is trimmed, so each state is a distinct nonempty
  // residual; a missing arc is the one remaining residual, ∅.
  for (State q = 0; q < dfa_.num_states(); ++q) {
    Dfa shifted = dfa_;
    shifted.initial = q;
    out.push_back(RecTraceLang(alpha_, minimize(shifted)));
    if (dfa_.delta[q].size() < alpha_->size()) partial = true;
  }
  if (partial) out.push_back(empty(alpha_));
  return out;
}

RecTraceLang intersect(const RecTraceLang& a, const RecTraceLang& b, const Budget& budget) {
  return RecTraceLang(a.alpha_, minimize(intersect(a.dfa_, b.dfa_, budget), budget));
}

RecTraceLang union_lang(const RecTraceLang& a, const RecTraceLang& b, const Budget& budget) {
  return RecTraceLang(a.alpha_, minimize(determinize(union_nfa(a.dfa_, b.dfa_), budget), budget));
}

RecTraceLang difference(const RecTraceLang& a, const RecTraceLang& b, const Budget& budget) {
  return RecTraceLang(a.alpha_, minimize(difference(a.dfa_, b.dfa_, budget), budget));
}

Dfa step_saturate(const RecTraceLang& lang, const Budget& budget) {
  const AlphabetRef& alpha = lang.alphabet();
  const Dfa& m = lang.word_dfa();
  budget.charge(m.num_states() * alpha->steps().size(), "step saturation");
  Dfa out(Domain::steps(alpha));
  for (State q = 0; q < m.num_states(); ++q) out.add_state(m.finals[q] != 0);
  out.initial = m.initial;
  for (State q = 0; q < m.num_states(); ++q) {
    out.add_arc(q, Symbol{0}, q);  // reading the empty step stays put
    for (StepMask step : alpha->steps()) {
      std::vector<Letter> asc, desc;
      for_each_letter(step, [&](Letter a) { asc.push_back(a); });
      desc.assign(asc.rbegin(), asc.rend());
      auto follow = [&](const std::vector<Letter>& order) -> std::optional<State> {
        State s = q;
        for (Letter a : order) {
          auto t = m.step(s, static_cast<Symbol>(a));
          if (!t) return std::nullopt;
          s = *t;
        }
        return s;
      };
      auto t1 = follow(asc), t2 = follow(desc);
      if (t1 != t2)
        throw InvariantError("step saturation needs a commutation-closed language");
      if (t1) out.add_arc(q, static_cast<Symbol>(step), *t1);
    }
  }
  return out;
}

LevelRegLang foata_encoding(const RecTraceLang& lang, const Budget& budget) {
  Dfa sat = step_saturate(lang, budget);
  // Same machine without the ∅ loops, over nonempty steps.
  Dfa restricted(Domain::steps_nonempty(lang.alphabet()));
  for (State q = 0; q < sat.num_states(); ++q) restricted.add_state(sat.finals[q] != 0);
  for (State q = 0; q < sat.num_states(); ++q)
    for (const auto& [x, t] : sat.delta[q])
      if (x != 0) restricted.add_arc(q, x, t);
  restricted.initial = sat.initial;
  Dfa enc = minimize(intersect(restricted, foata_automaton(lang.alphabet()), budget), budget);
  return LevelRegLang(lang.alphabet(), std::move(enc));
}

LevelRegLang LevelRegLang::from_step_dfa(const AlphabetRef& alpha, const Dfa& dfa,
                                         const Budget& budget) {
  if (dfa.domain != Domain::steps_nonempty(alpha))
    throw InvariantError("normal-form language wants an automaton over nonempty steps");
  Dfa m = minimize(intersect(dfa, foata_automaton(alpha), budget), budget);
  return LevelRegLang(alpha, std::move(m));
}

LevelRegLang LevelRegLang::from_finite(const AlphabetRef& alpha,
                                       const std::vector<FoataWord>& traces) {
  std::vector<Word> words;
  words.reserve(traces.size());
  for (const FoataWord& t : traces) {
    if (!same_alphabet(t.alphabet(), alpha))
      throw InvariantError("trace over a different alphabet");
    words.push_back(step_word(t));
  }
  return LevelRegLang(alpha, word_set_dfa(Domain::steps_nonempty(alpha), words));
}

LevelRegLang LevelRegLang::full(const AlphabetRef& alpha) {
  return LevelRegLang(alpha, minimize(foata_automaton(alpha)));
}

LevelRegLang LevelRegLang::empty(const AlphabetRef& alpha) {
  return LevelRegLang(alpha, empty_dfa(Domain::steps_nonempty(alpha)));
}

bool LevelRegLang::contains(const FoataWord& t) const {
  if (!same_alphabet(t.alphabet(), alpha_))
    throw InvariantError("trace over a different alphabet");
  return dfa_.accepts(step_word(t));
}

std::vector<FoataWord> LevelRegLang::enumerate(std::size_t max_steps, std::size_t cap,
                                               bool* truncated) const {
  std::vector<FoataWord> out;
  for (const Word& w : enumerate_words(dfa_, max_steps, cap, truncated))
    out.push_back(from_step_word(alpha_, w));
  return out;
}

LevelRegLang intersect(const LevelRegLang& a, const LevelRegLang& b, const Budget& budget) {
  return LevelRegLang(a.alpha_, minimize(intersect(a.dfa_, b.dfa_, budget), budget));
}

LevelRegLang union_lang(const LevelRegLang& a, const LevelRegLang& b, const Budget& budget) {
  return LevelRegLang(a.alpha_,
                      minimize(determinize(union_nfa(a.dfa_, b.dfa_), budget), budget));
}

LevelRegLang difference(const LevelRegLang& a, const LevelRegLang& b, const Budget& budget) {
  return LevelRegLang(a.alpha_, minimize(difference(a.dfa_, b.dfa_, budget), budget));
}

LevelRegLang complement_in_foata(const LevelRegLang& a, const Budget& budget) {
  Dfa universe = foata_automaton(a.alpha_);
  return LevelRegLang(a.alpha_, minimize(difference(universe, a.dfa_, budget), budget));
}

}  // namespace tracta
