#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tracta/rtl.hpp"

namespace tracta {

// First-order formulas over the edge labels of an automatic presentation.
// Variables are named; quantifiers range over the presentation's vertex
// language.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Edge, Eq, Not, And, Or, Implies, Exists, Forall };

  Kind kind;
  std::string label;      // Edge
  std::string var, var2;  // Edge/Eq operands; quantifiers bind `var`
  FormulaPtr lhs, rhs;    // children; unary nodes use lhs only
};

FormulaPtr fo_edge(std::string label, std::string x, std::string y);
FormulaPtr fo_eq(std::string x, std::string y);
FormulaPtr fo_not(FormulaPtr f);
FormulaPtr fo_and(FormulaPtr a, FormulaPtr b);
FormulaPtr fo_or(FormulaPtr a, FormulaPtr b);
FormulaPtr fo_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr fo_exists(std::string var, FormulaPtr body);
FormulaPtr fo_forall(std::string var, FormulaPtr body);

// Grammar: edge(LABEL, x, y) | x = y | !f | f & g | f | g | f -> g |
// E x. f | A x. f. Precedence ! > & > | > ->, implies is right-associative,
// a quantifier's body extends as far right as possible, and the dot after
// the bound variable is optional. E and A are reserved words, not variables.
FormulaPtr parse_formula(const std::string& text);
std::string to_text(const Formula& f);

// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);
// Renames bound variables so every binder introduces a distinct name that
// also avoids every free variable.
FormulaPtr rename_apart(const FormulaPtr& f);

// The set of satisfying assignments of a compiled formula, one synchronized
// track per free variable. One variable is held over the plain step domain,
// several as a padded tuple; a closed formula has no tracks and carries its
// truth value (the automaton is then universal or empty over the step
// domain, so nonemptiness agrees with `truth`).
struct AssignmentAutomaton {
  AlphabetRef alpha;
  std::vector<std::string> vars;  // track order
  Dfa dfa;
  std::optional<bool> truth;  // engaged iff vars is empty
};

// Structural compilation: atoms from the presentation's relations, boolean
// connectives by product and complement relative to the per-track vertex
// universe, quantifiers by track projection. `var_order`, when nonempty,
// must be a permutation of the free variables and overrides the default
// first-occurrence track order. Errors name the offending subformula.
AssignmentAutomaton compile_formula(const FormulaPtr& f, const AutomaticPresentation& pres,
                                    const std::vector<std::string>& var_order = {},
                                    const Budget& budget = Budget());

// Truth of a closed sentence.
bool decide(const FormulaPtr& sentence, const AutomaticPresentation& pres,
            const Budget& budget = Budget());

// Length-lexicographically least satisfying assignment, or nullopt if the
// formula is unsatisfiable. A true sentence yields an empty assignment.
std::optional<std::map<std::string, FoataWord>> witness(const FormulaPtr& f,
                                                        const AutomaticPresentation& pres,
                                                        const Budget& budget = Budget());

// Truth under the given constants, which must cover every free variable;
// implemented by restricting each track to a singleton.
bool holds(const FormulaPtr& f, const AutomaticPresentation& pres,
           const std::map<std::string, FoataWord>& constants,
           const Budget& budget = Budget());

// An explicit finite graph together with an enumerative model checker whose
// quantifiers range over the listed vertices. Independent of the automata
// pipeline; used as an oracle on finite presentations.
struct ExplicitGraph {
  AlphabetRef alpha;
  std::vector<FoataWord> vertices;  // sorted, unique
  std::map<std::string, std::set<std::pair<std::size_t, std::size_t>>> edges;
};

ExplicitGraph explicit_graph(AlphabetRef alpha, const std::vector<GraphEdge>& edges);
bool naive_decide(const FormulaPtr& sentence, const ExplicitGraph& g);

}  // namespace tracta
