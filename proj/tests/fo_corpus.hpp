#pragma once

#include <random>
#include <string>
#include <vector>

#include "tracta/fo.hpp"
#include "helpers.hpp"

// Fixed formula corpora shared by the unit tests and the acceptance suite.
namespace fc {

using namespace tracta;

struct Judged {
  const char* text;
  bool truth;
};

// Hand-derived truths on the infinite-grid presentation (aIb; a and b append
// a letter at every vertex; f loops exactly on the balanced diagonal).
inline const std::vector<Judged>& grid_corpus() {
  static const std::vector<Judged> corpus = {
      // the origin sits on the diagonal
      {"E x. edge(f, x, x)", true},
      // a and b are functional
      {"A x. A y. A z. (edge(a, x, y) & edge(a, x, z) -> y = z)", true},
      {"A x. A y. A z. (edge(b, x, y) & edge(b, x, z) -> y = z)", true},
      // the commuting square, as a pure existential sentence
      {"E x. E y. E z. E w. (edge(a, x, y) & edge(b, x, z) & edge(b, y, w) & edge(a, z, w))",
       true},
      // a strictly grows the trace: no loop, no 2-cycle
      {"E x. edge(a, x, x)", false},
      {"E x. E y. (edge(a, x, y) & edge(a, y, x))", false},
      // a is total
      {"A x. E y. edge(a, x, y)", true},
      // f is a partial identity
      {"A x. A y. (edge(f, x, y) -> x = y)", true},
      // one a then one b returns to the diagonal
      {"E x. (edge(f, x, x) & E y. (edge(a, x, y) & E z. (edge(b, y, z) & edge(f, z, z))))",
       true},
      // a single a always leaves the diagonal
      {"A x. (edge(f, x, x) -> !(E y. (edge(a, x, y) & edge(f, y, y))))", true},
      {"E x. E y. (!(x = y) & edge(a, x, y))", true},
      {"A x. (edge(f, x, x) -> E y. (edge(a, x, y) & edge(f, y, y)))", false},
  };
  return corpus;
}

// A finite explicit graph: full dependence on {a, b}, finite contexts and
// finite rewrite languages, seven vertices, twelve edges, with loops.
inline RtlSystem finite_system() {
  AlphabetRef al = th::ab_dep();
  auto fin = [&](const std::vector<std::string>& ws) {
    std::vector<FoataWord> ts;
    for (const auto& w : ws) ts.push_back(foata_normalize(al, w));
    return RecTraceLang::from_finite(al, ts);
  };
  auto lvl = [&](const std::vector<std::string>& ws) {
    std::vector<FoataWord> ts;
    for (const auto& w : ws) ts.push_back(foata_normalize(al, w));
    return LevelRegLang::from_finite(al, ts);
  };
  RtlSystem sys{al, {}, {}};
  sys.rules.push_back(make_rule("x", lvl({"", "a"}), fin({"", "b"}), fin({"b", "ab"})));
  sys.rules.push_back(make_rule("y", lvl({"", "b"}), fin({"a"}), fin({"", "ba"})));
  return sys;
}

namespace detail {

inline const std::string& pick(std::mt19937_64& rng, const std::vector<std::string>& xs) {
  return xs[rng() % xs.size()];
}

inline FormulaPtr leaf(std::mt19937_64& rng, const std::vector<std::string>& labels,
                       const std::vector<std::string>& scope) {
  if (rng() % 3 == 0) return fo_eq(pick(rng, scope), pick(rng, scope));
  return fo_edge(pick(rng, labels), pick(rng, scope), pick(rng, scope));
}

inline FormulaPtr boolean(std::mt19937_64& rng, const std::vector<std::string>& labels,
                          const std::vector<std::string>& scope) {
  switch (rng() % 5) {
    case 0: return fo_not(leaf(rng, labels, scope));
    case 1: return fo_and(leaf(rng, labels, scope), leaf(rng, labels, scope));
    case 2: return fo_or(leaf(rng, labels, scope), leaf(rng, labels, scope));
    case 3: return fo_implies(leaf(rng, labels, scope), leaf(rng, labels, scope));
    default: return leaf(rng, labels, scope);
  }
}

inline FormulaPtr guarded_body(std::mt19937_64& rng, const std::vector<std::string>& labels,
                               std::vector<std::string>& scope, int quants_left) {
  if (quants_left > 0 && rng() % 2 == 0) {
    std::string z = "v" + std::to_string(scope.size());
    const std::string& anchor = pick(rng, scope);
    FormulaPtr guard = rng() % 2 == 0 ? fo_edge(pick(rng, labels), z, anchor)
                                      : fo_edge(pick(rng, labels), anchor, z);
    scope.push_back(z);
    FormulaPtr inner = guarded_body(rng, labels, scope, quants_left - 1);
    scope.pop_back();
    if (rng() % 2 == 0) return fo_exists(z, fo_and(std::move(guard), std::move(inner)));
    return fo_forall(z, fo_implies(std::move(guard), std::move(inner)));
  }
  return boolean(rng, labels, scope);
}

}  // namespace detail

// A closed sentence of quantifier depth at most `depth` (>= 2) in which
// every quantified variable is introduced through an edge atom, so its truth
// over the finite incident-vertex graph and over the full automatic
// presentation coincide.
inline FormulaPtr guarded_sentence(std::mt19937_64& rng, const std::vector<std::string>& labels,
                                   int depth) {
  std::vector<std::string> scope = {"v0", "v1"};
  FormulaPtr guard = fo_edge(detail::pick(rng, labels), "v0", "v1");
  FormulaPtr inner = detail::guarded_body(rng, labels, scope, depth - 2);
  if (rng() % 2 == 0)
    return fo_exists("v0", fo_exists("v1", fo_and(std::move(guard), std::move(inner))));
  return fo_forall("v0", fo_forall("v1", fo_implies(std::move(guard), std::move(inner))));
}

}  // namespace fc
