#pragma once

#include <vector>

#include "tracta/nfa.hpp"
#include "tracta/trace.hpp"

namespace tracta {

// Foata normal form as a word of step symbols (the masks), and back.
Word step_word(const FoataWord& t);
FoataWord from_step_word(const AlphabetRef& alpha, const Word& w);

// Acceptor of all Foata normal forms: a start state plus one state per
// nonempty step, all final; step B may follow step A only when A ▷ B.
Dfa foata_automaton(const AlphabetRef& alpha);

// True iff the language is closed under swapping adjacent independent
// letters. Minimizes internally; on a minimal partial DFA closure is
// equivalent to δ(δ(q,a),b) = δ(δ(q,b),a) for all states q and independent
// a,b, with a missing arc standing for the (unique, absent) dead state.
bool is_trace_closed(const AlphabetRef& alpha, const Dfa& dfa,
                     const Budget& budget = Budget());

// A trace-closed regular word language, held as its canonical minimal DFA
// over letters, so operator== is language equality.
class RecTraceLang {
 public:
  // Throws InvariantError when the language is not trace-closed.
  static RecTraceLang from_dfa(const AlphabetRef& alpha, const Dfa& dfa,
                               const Budget& budget = Budget());
  // All linearizations of the given traces.
  static RecTraceLang from_finite(const AlphabetRef& alpha,
                                  const std::vector<FoataWord>& traces);
  static RecTraceLang full(const AlphabetRef& alpha);
  static RecTraceLang empty(const AlphabetRef& alpha);

  const AlphabetRef& alphabet() const { return alpha_; }
  const Dfa& word_dfa() const { return dfa_; }

  bool contains(const FoataWord& t) const;
  bool contains_word(const std::vector<Letter>& w) const;
  bool is_empty_lang() const { return is_empty(dfa_); }

  // t⁻¹L = {s : t·s ∈ L}, again trace-closed.
  RecTraceLang residual(const FoataWord& t) const;
  // The distinct residuals over all divisors, the empty language included
  // when some trace is not a prefix. Finite: one per minimal-DFA state,
  // plus at most the empty one.
  std::vector<RecTraceLang> residual_set() const;

  bool operator==(const RecTraceLang& o) const {
    return same_alphabet(alpha_, o.alpha_) && same_dfa(dfa_, o.dfa_);
  }
  bool operator!=(const RecTraceLang& o) const { return !(*this == o); }

 private:
  RecTraceLang(AlphabetRef a, Dfa d) : alpha_(std::move(a)), dfa_(std::move(d)) {}

  friend RecTraceLang intersect(const RecTraceLang&, const RecTraceLang&, const Budget&);
  friend RecTraceLang union_lang(const RecTraceLang&, const RecTraceLang&, const Budget&);
  friend RecTraceLang difference(const RecTraceLang&, const RecTraceLang&, const Budget&);

  AlphabetRef alpha_;
  Dfa dfa_;  // minimal, trace-closed, over Domain::letters
};

RecTraceLang intersect(const RecTraceLang& a, const RecTraceLang& b,
                       const Budget& budget = Budget());
RecTraceLang union_lang(const RecTraceLang& a, const RecTraceLang& b,
                        const Budget& budget = Budget());
RecTraceLang difference(const RecTraceLang& a, const RecTraceLang& b,
                        const Budget& budget = Budget());

// Lift the minimal letter DFA to whole steps: δ'(q,A) = δ(q,w) for any
// linearization w of A (all agree on trace-closed input; a disagreement
// between two orders throws), plus a ∅ self-loop at every state. Recognizes
// the step sequences whose flattening lies in the language.
Dfa step_saturate(const RecTraceLang& lang, const Budget& budget = Budget());

// A regular set of Foata normal forms, held as its canonical minimal DFA
// over nonempty steps. Strictly more languages than foata_encoding images.
class LevelRegLang {
 public:
  // Intersects with the Foata acceptor, so stray step sequences are dropped.
  static LevelRegLang from_step_dfa(const AlphabetRef& alpha, const Dfa& dfa,
                                    const Budget& budget = Budget());
  static LevelRegLang from_finite(const AlphabetRef& alpha,
                                  const std::vector<FoataWord>& traces);
  static LevelRegLang full(const AlphabetRef& alpha);   // every normal form
  static LevelRegLang empty(const AlphabetRef& alpha);

  const AlphabetRef& alphabet() const { return alpha_; }
  const Dfa& step_dfa() const { return dfa_; }

  bool contains(const FoataWord& t) const;
  bool is_empty_lang() const { return is_empty(dfa_); }

  // Members with at most max_steps steps, in length-lex step order.
  std::vector<FoataWord> enumerate(std::size_t max_steps, std::size_t cap,
                                   bool* truncated = nullptr) const;

  bool operator==(const LevelRegLang& o) const {
    return same_alphabet(alpha_, o.alpha_) && same_dfa(dfa_, o.dfa_);
  }
  bool operator!=(const LevelRegLang& o) const { return !(*this == o); }

 private:
  LevelRegLang(AlphabetRef a, Dfa d) : alpha_(std::move(a)), dfa_(std::move(d)) {}

  friend LevelRegLang intersect(const LevelRegLang&, const LevelRegLang&, const Budget&);
  friend LevelRegLang union_lang(const LevelRegLang&, const LevelRegLang&, const Budget&);
  friend LevelRegLang difference(const LevelRegLang&, const LevelRegLang&, const Budget&);
  friend LevelRegLang complement_in_foata(const LevelRegLang&, const Budget&);
  friend LevelRegLang foata_encoding(const RecTraceLang&, const Budget&);

  AlphabetRef alpha_;
  Dfa dfa_;  // minimal, language ⊆ Foata normal forms, over steps_nonempty
};

LevelRegLang intersect(const LevelRegLang& a, const LevelRegLang& b,
                       const Budget& budget = Budget());
LevelRegLang union_lang(const LevelRegLang& a, const LevelRegLang& b,
                        const Budget& budget = Budget());
LevelRegLang difference(const LevelRegLang& a, const LevelRegLang& b,
                        const Budget& budget = Budget());
// Complement relative to the set of all Foata normal forms.
LevelRegLang complement_in_foata(const LevelRegLang& a, const Budget& budget = Budget());

// The set of Foata normal forms of the members: step_saturate restricted to
// nonempty steps, intersected with the Foata acceptor.
LevelRegLang foata_encoding(const RecTraceLang& lang, const Budget& budget = Budget());

}  // namespace tracta
