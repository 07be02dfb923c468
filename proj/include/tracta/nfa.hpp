#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tracta/domain.hpp"
#include "tracta/error.hpp"

namespace tracta {

using State = std::uint32_t;
inline constexpr Symbol kEps = ~Symbol{0};

using Word = std::vector<Symbol>;

struct Nfa {
  Domain domain;
  std::vector<std::vector<std::pair<Symbol, State>>> delta;
  std::vector<State> initials;
  std::vector<char> finals;

  explicit Nfa(Domain d) : domain(std::move(d)) {}

  std::size_t num_states() const { return delta.size(); }
  State add_state(bool fin = false) {
    delta.emplace_back();
    finals.push_back(fin ? 1 : 0);
    return static_cast<State>(delta.size() - 1);
  }
  void add_arc(State s, Symbol x, State t) { delta[s].emplace_back(x, t); }
};

// Deterministic automaton, possibly partial (missing arc = reject). Arcs per
// state are kept sorted by symbol.
struct Dfa {
  Domain domain;
  std::vector<std::vector<std::pair<Symbol, State>>> delta;
  State initial = 0;
  std::vector<char> finals;

  explicit Dfa(Domain d) : domain(std::move(d)) {}

  std::size_t num_states() const { return delta.size(); }
  State add_state(bool fin = false) {
    delta.emplace_back();
    finals.push_back(fin ? 1 : 0);
    return static_cast<State>(delta.size() - 1);
  }
  void add_arc(State s, Symbol x, State t);  // keeps arcs sorted, rejects conflicts

  std::optional<State> step(State s, Symbol x) const;
  std::optional<State> run(const Word& w) const;
  bool accepts(const Word& w) const;
  bool is_final(State s) const { return finals[s] != 0; }
};

Nfa to_nfa(const Dfa& d);

// Subset construction with ε-closure. State order is BFS discovery order, so
// the result is canonical given the input.
Dfa determinize(const Nfa& n, const Budget& budget = Budget());

// Trim + Moore partition refinement + BFS renumbering: canonical minimal
// partial DFA (dead state elided; empty language = one non-final state).
Dfa minimize(const Dfa& d, const Budget& budget = Budget());

// Reachable-and-coreachable restriction (keeps the initial state alive even
// when the language is empty).
Dfa trim(const Dfa& d);

Dfa intersect(const Dfa& a, const Dfa& b, const Budget& budget = Budget());
// L(a) \ L(b). Also serves as complement relative to a universe automaton:
// difference(universe, b).
Dfa difference(const Dfa& a, const Dfa& b, const Budget& budget = Budget());
Nfa union_nfa(const Dfa& a, const Dfa& b);

bool is_empty(const Dfa& d);
bool subset_of(const Dfa& a, const Dfa& b, const Budget& budget = Budget());
bool equivalent(const Dfa& a, const Dfa& b, const Budget& budget = Budget());

// Lexicographically least among the shortest accepted words (numeric symbol
// order); nullopt when empty.
std::optional<Word> shortest_word(const Dfa& d);

// All accepted words of length ≤ max_len in length-lex order, up to `cap`
// many; sets *truncated when the cap cut the enumeration short.
std::vector<Word> enumerate_words(const Dfa& d, std::size_t max_len,
                                  std::size_t cap = SIZE_MAX, bool* truncated = nullptr);

// Minimal DFA of a finite word set.
Dfa word_set_dfa(const Domain& dom, const std::vector<Word>& words);

// One final state looping over every domain symbol (base domains only).
Dfa universal_dfa(const Domain& dom);
// One non-final state, no arcs.
Dfa empty_dfa(const Domain& dom);

// Structural equality; meaningful on canonical minimized automata.
bool same_dfa(const Dfa& a, const Dfa& b);

}  // namespace tracta
