#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tracta/fo.hpp"
#include "tracta/rtl.hpp"

namespace tracta {

// Deterministic Σ-automaton with the independence diamond: for independent
// a,b, every a·b path has a matching b·a path to the same state. Arcs are a
// raw list so validate() can describe violations of either condition.
struct ConcurrentAutomaton {
  AlphabetRef alpha;
  std::size_t num_states = 0;
  State initial = 0;
  std::vector<State> finals;
  std::vector<std::tuple<State, Letter, State>> arcs;

  // First matching arc; unique once validate() passes.
  std::optional<State> step(State p, Letter a) const;
  std::optional<State> run(State p, const std::vector<Letter>& w) const;
  bool is_final(State p) const;
};

// One line per problem (structure, determinism, diamond); empty means valid.
std::vector<std::string> validate(const ConcurrentAutomaton& a);

// Words labelling paths from `from` into `to`. Trace-closed because of the
// diamond property; that closure is re-asserted on construction.
RecTraceLang state_language(const ConcurrentAutomaton& a, State from,
                            const std::vector<State>& to,
                            const Budget& budget = Budget());

// The automaton of residuals t⁻¹𝓛 (finitely many): arcs by letters, initial
// 𝓛, finals the residuals containing the empty trace. Complete — the empty
// residual is a state like any other — and it recognizes ∪𝓛.
ConcurrentAutomaton residual_concurrent_automaton(const RecTraceLang& rec,
                                                  const Budget& budget = Budget());

// The unfolding of `a` with reachability, as a rewriting system over the
// labels Σ ∪ {f, *}: per letter x a rule ⟨L(a,i,Q_x)⟩·([ε]→x[x]) with Q_x the
// states where x is enabled; acceptance loops ⟨L(a,i,F)⟩·([ε]→f[ε]), emitted
// even when F is empty; and per state q the reachability family
// ⟨L(a,i,q)⟩·([ε]→*[L(a,q,Q)]). Compiling the result yields the graph
// {[u]→x[ux]} ∪ {[u]→f[u] | u accepted} ∪ {[u]→*[uv]} over runnable words.
RtlSystem unfold_rtl(const ConcurrentAutomaton& a, const Budget& budget = Budget());

// unfold_rtl plus, per language 𝓛_j, the family ⟨L(a,i,q)⟩·([ε]→[L(a,q,Q)∩𝓛_j])
// labelled "L1", "L2", … in the given order: reachability along a path whose
// label lies in 𝓛_j.
RtlSystem unfold_rtl_rec(const ConcurrentAutomaton& a,
                         const std::vector<RecTraceLang>& langs,
                         const Budget& budget = Budget());

// One state over {a,b} with aIb: the unfolding is the infinite grid. With
// `accepting`, f loops on every vertex; otherwise f is empty.
ConcurrentAutomaton grid_automaton(bool accepting = false);
// One state over {a,b,c} with aIb only: the unfolding hangs a fresh grid
// copy from every vertex by a c-edge (the grid tree).
ConcurrentAutomaton grid_tree_automaton(bool accepting = false);
// Named factory: "grid", "grid-tree", or "residual:(ab)*" (the residual
// automaton of (ab)* over dependent a,b). Unknown names raise ParseError.
ConcurrentAutomaton bundled_automaton(const std::string& name);

// The predicate "var has exactly one immediate letter predecessor". On
// unfolding vertices the predecessors are the removals of one maximal letter,
// so this is primality of the vertex trace; the empty trace (no maximal
// letter) and unreachable traces (no incident edge) are excluded.
FormulaPtr prime_formula(const AlphabetRef& alpha, const std::string& var);

// compile(unfold_rtl(residual_concurrent_automaton(rec))): the automatic
// presentation event-structure queries are answered over.
AutomaticPresentation es_presentation(const RecTraceLang& rec,
                                      const Budget& budget = Budget());

// An operand of an event-structure query: the variable name it uses in the
// emitted formula, plus a concrete trace when the operand is not left free.
struct EsOperand {
  std::string var = "x";
  std::optional<FoataWord> trace;
};

// A query against the event structure of 𝓛: the causal order ≤ (prefix order
// on primes), the conflict relation # (no common prime upper bound), or the
// unary marker λ_a (the prime's maximal letter is a).
struct EventStructureQuery {
  enum class Kind { Le, Conflict, Label };
  Kind kind = Kind::Le;
  std::string letter;  // Label only: the marked letter's name
  EsOperand first{"x", std::nullopt};
  EsOperand second{"y", std::nullopt};  // ignored for Label
};

struct EsAnswer {
  FormulaPtr formula;          // free variables: the non-concrete operands
  std::optional<bool> truth;   // present when every used operand is concrete
};

// Builds the relation as a first-order formula over the unfolding of the
// residual automaton — Le: prime(x) ∧ prime(y) ∧ x→*y; Conflict: primes with
// ¬∃z(prime(z) ∧ x→*z ∧ y→*z); Label: prime(x) ∧ ∃y y→a x — and evaluates it
// when the operands are concrete.
EsAnswer es_query(const AutomaticPresentation& unfolding, const EventStructureQuery& q,
                  const Budget& budget = Budget());
EsAnswer es_query(const RecTraceLang& rec, const EventStructureQuery& q,
                  const Budget& budget = Budget());

}  // namespace tracta
