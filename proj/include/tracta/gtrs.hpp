#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracta/error.hpp"

namespace tracta {

// Function symbols with fixed arities; symbols are dense indices in
// declaration order.
class RankedAlphabet {
 public:
  explicit RankedAlphabet(std::vector<std::pair<std::string, int>> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int sym) const { return symbols_[sym].first; }
  int arity(int sym) const { return symbols_[sym].second; }
  std::optional<int> find(std::string_view name) const;

 private:
  std::vector<std::pair<std::string, int>> symbols_;
};

using RankedAlphabetRef = std::shared_ptr<const RankedAlphabet>;

RankedAlphabetRef make_ranked_alphabet(
    std::vector<std::pair<std::string, int>> symbols);

// Node address inside a term: child indices starting at 1; empty = root.
using Position = std::vector<int>;

// Prefix order on positions: p is an ancestor-or-self of q.
bool position_le(const Position& p, const Position& q);

// "ε" for the root, else dot-separated child indices ("1.2").
std::string render_position(const Position& p);

// Finite tree as an explicit node map. Invariants: domain nonempty and
// prefix-closed, and the children of an arity-n node are exactly 1..n.
// All operations preserve them; parse_term/make_term establish them.
struct GroundTerm {
  RankedAlphabetRef ranked;
  std::map<Position, int> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  bool defined_at(const Position& u) const { return nodes.count(u) != 0; }
  int symbol_at(const Position& u) const;  // throws InvariantError if absent

  GroundTerm subterm(const Position& u) const;
  // Copy with the subtree at u replaced by s.
  GroundTerm replace(const Position& u, const GroundTerm& s) const;

  std::string render() const;  // prefix notation, e.g. "c(bot1,bot2)"

  bool operator==(const GroundTerm& o) const { return nodes == o.nodes; }
  bool operator!=(const GroundTerm& o) const { return !(*this == o); }
  // Node count first, then the node list; total within one alphabet.
  bool operator<(const GroundTerm& o) const;
};

GroundTerm make_term(const RankedAlphabetRef& ranked, std::string_view sym,
                     std::vector<GroundTerm> children = {});
GroundTerm parse_term(const RankedAlphabetRef& ranked, std::string_view text);

// One rewrite rule: any subtree equal to lhs may become rhs. Sides are
// ground and distinct, so a step never maps a term to itself.
struct GtrsRule {
  std::string label;
  GroundTerm lhs;
  GroundTerm rhs;
};

struct Gtrs {
  RankedAlphabetRef ranked;
  std::vector<std::string> labels;
  std::vector<GtrsRule> rules;
  GroundTerm initial;

  // Largest size change any single step can make (0 if no rules).
  int size_delta() const;
  // Largest rule side (0 if no rules).
  int max_rule_size() const;
};

Gtrs make_gtrs(RankedAlphabetRef ranked, std::vector<std::string> labels,
               std::vector<GtrsRule> rules, GroundTerm initial);

// Two unary towers under a pairing root; the rewrite graph is the NxN grid:
// c(s1^m(bot1), s2^n(bot2)) is the point (m,n), a steps m, b steps n.
Gtrs grid_gtrs();

// One rewrite step out of t: t --label--> t[pos <- rhs].
struct RewriteStep {
  Position pos;
  std::string label;
  GroundTerm target;

  bool operator==(const RewriteStep& o) const {
    return pos == o.pos && label == o.label && target == o.target;
  }
  bool operator<(const RewriteStep& o) const;
};

// All one-step rewrites of t, sorted by (position, label, target).
std::vector<RewriteStep> rewrite_edges(const Gtrs& g, const GroundTerm& t);

// Finite piece of a labelled graph: vertex display names plus index-based
// edges. truncated marks a cut into an unexplored remainder.
struct FragmentEdge {
  int src = 0;
  std::string label;
  int dst = 0;

  bool operator==(const FragmentEdge& o) const {
    return src == o.src && label == o.label && dst == o.dst;
  }
  bool operator<(const FragmentEdge& o) const;
};

struct TermGraphFragment {
  std::vector<std::string> vertices;
  std::vector<FragmentEdge> edges;  // sorted, deduped; endpoints are indices
  bool truncated = false;

  bool operator==(const TermGraphFragment& o) const {
    return vertices == o.vertices && edges == o.edges && truncated == o.truncated;
  }
};

// Breadth-first fragment of the rewrite graph from the initial term, at most
// `budget` vertices. Layers are admitted in (size, node list) order, so the
// result is deterministic; edges keep only explored endpoints; truncated is
// set iff some explored term has a rewrite leaving the fragment.
TermGraphFragment explore(const Gtrs& g, int budget);

// Fragment of the infinite unravelling that hangs a fresh copy of g under
// every vertex: vertices are copy paths (words over V_g), each base edge
// p->q is repeated inside every copy, and a c-edge links each path u to the
// root copy u.root. depth bounds the nesting (0 = the base copy alone, with
// the c-edges omitted). The full unravelling is infinite, so the fragment is
// always truncated.
TermGraphFragment tree_of(const TermGraphFragment& g, const std::string& root,
                          int depth);

// Connected component of the explored graph after dropping every edge with
// an endpoint of size < n, paired with its frontier (component vertices
// incident to a dropped edge) and an isomorphism signature of the
// (component, frontier) pair.
struct SizeComponent {
  TermGraphFragment fragment;  // component vertices + its surviving edges
  std::vector<int> frontier;   // fragment vertex ids, sorted
  std::string signature;       // "exact:..." canonical or "wl:..." hash
  bool exact = false;          // signature is a true canonical form
  bool approximate = false;    // component touches the exploration cut
  int min_size = 0;            // smallest term size in the component
};

// Explores up to `budget` terms, then decomposes at size cut n. Components
// with at most 12 vertices get an exact canonical signature (equal signature
// iff isomorphic as (component, frontier) pairs); larger ones get a
// color-refinement hash, a heuristic marked exact=false. Components touching
// the exploration cut are marked approximate: their shape is unreliable and
// they should be excluded from signature statistics.
std::vector<SizeComponent> decompose(const Gtrs& g, int n, int budget);

// Positions where a rule left side matches (a step fires out of t).
std::vector<Position> redex_positions(const Gtrs& g, const GroundTerm& t);
// Positions where t touches a step in either direction: a left side matches
// (outgoing) or a right side matches (incoming from t with that side undone).
std::vector<Position> incident_positions(const Gtrs& g, const GroundTerm& t);

// The incident position that is a prefix of every other one, when it exists.
std::optional<Position> min_rewrite_position(const Gtrs& g, const GroundTerm& t);
// True iff t has no incident position or a least one exists; on tree-shaped
// rewrite graphs this holds for every reachable term.
bool check_positions_comparable(const Gtrs& g, const GroundTerm& t);

}  // namespace tracta
