#include "tracta/unfold.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tracta {

namespace {

std::string state_name(State p) { return "state " + std::to_string(p); }

void require_valid(const ConcurrentAutomaton& a) {
  std::vector<std::string> problems = validate(a);
  if (problems.empty()) return;
  std::string msg = "invalid concurrent automaton: " + problems.front();
  if (problems.size() > 1)
    msg += " (and " + std::to_string(problems.size() - 1) + " more)";
  throw InvariantError(msg);
}

// state_language without revalidating, for callers that already did.
RecTraceLang path_language(const ConcurrentAutomaton& a, State from,
                           const std::vector<State>& to, const Budget& budget) {
  Dfa d(Domain::letters(a.alpha));
  for (std::size_t p = 0; p < a.num_states; ++p)
    d.add_state(std::find(to.begin(), to.end(), static_cast<State>(p)) != to.end());
  d.initial = from;
  std::set<std::tuple<State, Letter, State>> arcs(a.arcs.begin(), a.arcs.end());
  for (const auto& [p, x, q] : arcs) d.add_arc(p, Symbol{x}, q);
  return RecTraceLang::from_dfa(a.alpha, d, budget);
}

std::vector<State> all_states(const ConcurrentAutomaton& a) {
  std::vector<State> qs(a.num_states);
  for (std::size_t p = 0; p < a.num_states; ++p) qs[p] = static_cast<State>(p);
  return qs;
}

// Rule labels reuse the letter names, so those may not collide with the
// synthesized labels.
void require_label_free(const ConcurrentAutomaton& a, const std::string& label) {
  if (a.alpha->find(label))
    throw InvariantError("letter name '" + label + "' collides with an unfolding label");
}

std::string fresh_var(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

// ⋁_a edge(a, from, to)
FormulaPtr any_letter_edge(const AlphabetRef& alpha, const std::string& from,
                           const std::string& to) {
  FormulaPtr f;
  for (Letter x = 0; x < alpha->size(); ++x) {
    FormulaPtr e = fo_edge(alpha->name(x), from, to);
    f = f ? fo_or(f, e) : e;
  }
  return f;
}

}  // namespace

std::optional<State> ConcurrentAutomaton::step(State p, Letter a) const {
  for (const auto& [src, x, dst] : arcs)
    if (src == p && x == a) return dst;
  return std::nullopt;
}

std::optional<State> ConcurrentAutomaton::run(State p,
                                              const std::vector<Letter>& w) const {
  std::optional<State> at = p;
  for (Letter a : w) {
    if (!at) return std::nullopt;
    at = step(*at, a);
  }
  return at;
}

bool ConcurrentAutomaton::is_final(State p) const {
  return std::find(finals.begin(), finals.end(), p) != finals.end();
}

std::vector<std::string> validate(const ConcurrentAutomaton& a) {
  std::vector<std::string> problems;
  if (a.initial >= a.num_states)
    problems.push_back("initial " + state_name(a.initial) + " does not exist");
  for (State f : a.finals)
    if (f >= a.num_states) problems.push_back("final " + state_name(f) + " does not exist");
  bool arcs_ok = true;
  for (const auto& [p, x, q] : a.arcs) {
    if (p >= a.num_states || q >= a.num_states) {
      problems.push_back("arc (" + std::to_string(p) + "," + std::to_string(x) + "," +
                         std::to_string(q) + ") references a missing state");
      arcs_ok = false;
    } else if (x >= a.alpha->size()) {
      problems.push_back("arc at " + state_name(p) + " uses letter index " +
                         std::to_string(x) + " outside the alphabet");
      arcs_ok = false;
    }
  }
  if (!arcs_ok) return problems;

  // succ[p][a] as sets, so both conditions read off arc-set semantics even
  // when determinism already failed.
  std::vector<std::map<Letter, std::set<State>>> succ(a.num_states);
  for (const auto& [p, x, q] : a.arcs) succ[p][x].insert(q);

  for (std::size_t p = 0; p < a.num_states; ++p)
    for (const auto& [x, qs] : succ[p])
      if (qs.size() > 1) {
        std::string targets;
        for (State q : qs) targets += (targets.empty() ? "" : ", ") + std::to_string(q);
        problems.push_back("nondeterministic: " + state_name(static_cast<State>(p)) +
                           " has " + std::to_string(qs.size()) + " successors under '" +
                           a.alpha->name(x) + "' (" + targets + ")");
      }

  auto two_step = [&](State p, Letter x, Letter y) {
    std::set<State> out;
    auto mid = succ[p].find(x);
    if (mid == succ[p].end()) return out;
    for (State r : mid->second) {
      auto end = succ[r].find(y);
      if (end != succ[r].end()) out.insert(end->second.begin(), end->second.end());
    }
    return out;
  };
  for (std::size_t p = 0; p < a.num_states; ++p)
    for (Letter x = 0; x < a.alpha->size(); ++x)
      for (Letter y = 0; y < a.alpha->size(); ++y) {
        if (x == y || a.alpha->dependent(x, y)) continue;
        std::set<State> ab = two_step(static_cast<State>(p), x, y);
        std::set<State> ba = two_step(static_cast<State>(p), y, x);
        for (State q : ab)
          if (!ba.count(q))
            problems.push_back("diamond violation: " + state_name(static_cast<State>(p)) +
                               " reaches " + state_name(q) + " via '" + a.alpha->name(x) +
                               "''" + a.alpha->name(y) + "' but not via '" + a.alpha->name(y) +
                               "''" + a.alpha->name(x) + "'");
      }
  return problems;
}

RecTraceLang state_language(const ConcurrentAutomaton& a, State from,
                            const std::vector<State>& to, const Budget& budget) {
  require_valid(a);
  if (from >= a.num_states)
    throw InvariantError("state_language: source " + state_name(from) + " does not exist");
  for (State q : to)
    if (q >= a.num_states)
      throw InvariantError("state_language: target " + state_name(q) + " does not exist");
  return path_language(a, from, to, budget);
}

ConcurrentAutomaton residual_concurrent_automaton(const RecTraceLang& rec,
                                                  const Budget& budget) {
  const AlphabetRef& al = rec.alphabet();
  ConcurrentAutomaton a{al, 0, 0, {}, {}};
  std::vector<RecTraceLang> states{rec};
  for (std::size_t p = 0; p < states.size(); ++p) {
    for (Letter x = 0; x < al->size(); ++x) {
      RecTraceLang r = states[p].residual(FoataWord(al, {bit(x)}));
      std::size_t q = 0;
      while (q < states.size() && states[q] != r) ++q;
      if (q == states.size()) {
        budget.charge(1, "residual automaton");
        states.push_back(std::move(r));
      }
      a.arcs.emplace_back(static_cast<State>(p), x, static_cast<State>(q));
    }
  }
  a.num_states = states.size();
  FoataWord eps(al);
  for (std::size_t p = 0; p < states.size(); ++p)
    if (states[p].contains(eps)) a.finals.push_back(static_cast<State>(p));
  return a;
}

RtlSystem unfold_rtl(const ConcurrentAutomaton& a, const Budget& budget) {
  require_valid(a);
  require_label_free(a, "f");
  require_label_free(a, "*");
  const AlphabetRef& al = a.alpha;
  RecTraceLang eps = RecTraceLang::from_finite(al, {FoataWord(al)});
  std::vector<State> everything = all_states(a);

  RtlSystem sys{al, {}, {}};
  for (Letter x = 0; x < al->size(); ++x) {
    std::vector<State> enabled;
    for (State p : everything)
      if (a.step(p, x)) enabled.push_back(p);
    LevelRegLang ctx = foata_encoding(path_language(a, a.initial, enabled, budget), budget);
    RecTraceLang rhs = RecTraceLang::from_finite(al, {FoataWord(al, {bit(x)})});
    sys.rules.push_back(make_rule(al->name(x), std::move(ctx), eps, std::move(rhs)));
  }
  LevelRegLang accept = foata_encoding(path_language(a, a.initial, a.finals, budget), budget);
  sys.rules.push_back(make_rule("f", std::move(accept), eps, eps));
  for (State q : everything) {
    LevelRegLang ctx = foata_encoding(path_language(a, a.initial, {q}, budget), budget);
    RecTraceLang rhs = path_language(a, q, everything, budget);
    sys.rules.push_back(make_rule("*", std::move(ctx), eps, std::move(rhs)));
  }
  return sys;
}

RtlSystem unfold_rtl_rec(const ConcurrentAutomaton& a,
                         const std::vector<RecTraceLang>& langs, const Budget& budget) {
  RtlSystem sys = unfold_rtl(a, budget);
  RecTraceLang eps = RecTraceLang::from_finite(a.alpha, {FoataWord(a.alpha)});
  std::vector<State> everything = all_states(a);
  for (std::size_t j = 0; j < langs.size(); ++j) {
    if (!same_alphabet(langs[j].alphabet(), a.alpha))
      throw InvariantError("unfold_rtl_rec: language " + std::to_string(j + 1) +
                           " uses a different alphabet");
    std::string label = "L" + std::to_string(j + 1);
    require_label_free(a, label);
    for (State q : everything) {
      LevelRegLang ctx = foata_encoding(path_language(a, a.initial, {q}, budget), budget);
      RecTraceLang rhs = intersect(path_language(a, q, everything, budget), langs[j], budget);
      sys.rules.push_back(make_rule(label, std::move(ctx), eps, std::move(rhs)));
    }
  }
  return sys;
}

ConcurrentAutomaton grid_automaton(bool accepting) {
  AlphabetRef al = make_alphabet({"a", "b"}, {{"a", "b"}});
  ConcurrentAutomaton a{al, 1, 0, {}, {{0, 0, 0}, {0, 1, 0}}};
  if (accepting) a.finals.push_back(0);
  return a;
}

ConcurrentAutomaton grid_tree_automaton(bool accepting) {
  AlphabetRef al = make_alphabet({"a", "b", "c"}, {{"a", "b"}});
  ConcurrentAutomaton a{al, 1, 0, {}, {{0, 0, 0}, {0, 1, 0}, {0, 2, 0}}};
  if (accepting) a.finals.push_back(0);
  return a;
}

ConcurrentAutomaton bundled_automaton(const std::string& name) {
  if (name == "grid") return grid_automaton();
  if (name == "grid-tree") return grid_tree_automaton();
  if (name == "residual:(ab)*") {
    AlphabetRef al = make_alphabet({"a", "b"});
    Dfa d(Domain::letters(al));
    State s0 = d.add_state(true);
    State s1 = d.add_state(false);
    d.initial = s0;
    d.add_arc(s0, Symbol{0}, s1);
    d.add_arc(s1, Symbol{1}, s0);
    return residual_concurrent_automaton(RecTraceLang::from_dfa(al, d));
  }
  throw ParseError("unknown built-in automaton '" + name +
                   "' (expected grid, grid-tree, or residual:(ab)*)");
}

FormulaPtr prime_formula(const AlphabetRef& alpha, const std::string& var) {
  if (alpha->size() == 0)
    throw InvariantError("prime predicate needs a nonempty alphabet");
  std::set<std::string> used{var};
  std::string p = fresh_var("p", used);
  used.insert(p);
  std::string q = fresh_var("q", used);
  used.insert(q);
  std::string r = fresh_var("r", used);
  FormulaPtr some = fo_exists(p, any_letter_edge(alpha, p, var));
  FormulaPtr at_most_one = fo_forall(
      q, fo_forall(r, fo_implies(fo_and(any_letter_edge(alpha, q, var),
                                        any_letter_edge(alpha, r, var)),
                                 fo_eq(q, r))));
  return fo_and(some, at_most_one);
}

AutomaticPresentation es_presentation(const RecTraceLang& rec, const Budget& budget) {
  return compile(unfold_rtl(residual_concurrent_automaton(rec, budget), budget), budget);
}

EsAnswer es_query(const AutomaticPresentation& unfolding, const EventStructureQuery& q,
                  const Budget& budget) {
  const AlphabetRef& al = unfolding.alpha;
  bool unary = q.kind == EventStructureQuery::Kind::Label;
  if (!unary && q.first.var == q.second.var)
    throw InvariantError("event-structure query needs distinct operand variables");

  const std::string& x = q.first.var;
  FormulaPtr f;
  if (q.kind == EventStructureQuery::Kind::Label) {
    if (!al->find(q.letter))
      throw InvariantError("event-structure label query: unknown letter '" + q.letter + "'");
    std::string y = fresh_var("p", {x});
    f = fo_and(prime_formula(al, x), fo_exists(y, fo_edge(q.letter, y, x)));
  } else {
    const std::string& y = q.second.var;
    FormulaPtr primes = fo_and(prime_formula(al, x), prime_formula(al, y));
    if (q.kind == EventStructureQuery::Kind::Le) {
      f = fo_and(std::move(primes), fo_edge("*", x, y));
    } else {
      std::string z = fresh_var("z", {x, y});
      FormulaPtr bound = fo_exists(
          z, fo_and(fo_and(prime_formula(al, z), fo_edge("*", x, z)), fo_edge("*", y, z)));
      f = fo_and(std::move(primes), fo_not(std::move(bound)));
    }
  }

  std::map<std::string, FoataWord> constants;
  bool all_concrete = true;
  for (const EsOperand* op : {&q.first, unary ? nullptr : &q.second}) {
    if (!op) continue;
    if (op->trace)
      constants.emplace(op->var, *op->trace);
    else
      all_concrete = false;
  }
  EsAnswer ans{std::move(f), std::nullopt};
  if (all_concrete) ans.truth = holds(ans.formula, unfolding, constants, budget);
  return ans;
}

EsAnswer es_query(const RecTraceLang& rec, const EventStructureQuery& q,
                  const Budget& budget) {
  return es_query(es_presentation(rec, budget), q, budget);
}

}  // namespace tracta
