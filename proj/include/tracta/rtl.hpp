#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tracta/sync.hpp"
#include "tracta/trace_lang.hpp"

namespace tracta {

// One rewriting rule 𝓤·(𝓥 →λ 𝓦): s →λ t iff s = u·v and t = u·w for some
// u ∈ 𝓤, v ∈ 𝓥, w ∈ 𝓦. The context may be any regular set of normal forms;
// the two sides must be trace-closed regular languages — with level-regular
// sides the edge relation stops being automatic over normal forms, so that
// combination is unrepresentable by construction.
struct RtlRule {
  std::string label;
  LevelRegLang context;
  RecTraceLang lhs;
  RecTraceLang rhs;
};

// Validates that all three languages share one alphabet.
RtlRule make_rule(std::string label, LevelRegLang context, RecTraceLang lhs,
                  RecTraceLang rhs);
// Convenience: a trace-closed context, converted to its set of normal forms.
RtlRule make_rule(std::string label, const RecTraceLang& context, RecTraceLang lhs,
                  RecTraceLang rhs);

struct RtlSystem {
  AlphabetRef alpha;
  std::vector<RtlRule> rules;
  // Labels beyond those carried by rules (their relations are empty).
  std::vector<std::string> extra_labels;

  // Sorted union of rule labels and extra_labels.
  std::vector<std::string> labels() const;
};

// The rewriting graph as automata: vertices are all Foata normal forms and
// each label carries a length-synchronized relation on them.
struct AutomaticPresentation {
  AlphabetRef alpha;
  LevelRegLang vertices;
  std::map<std::string, SyncRelation> relations;
};

// The relation {⟨u·v⟩ ⊗ ⟨u·w⟩ | u ∈ ctx, v ∈ lhs, w ∈ rhs}. Three-track
// product: while the context track consumes a step A, each output track
// consumes A∪E for letters E inserted at that level; afterwards the tracks
// run free and pad out. A context step is enabled only while it is
// independent of every letter inserted so far on either side — without that
// guard, letters could slip left past steps they do not commute with and the
// output would cover normal forms of the wrong traces. Finally intersect
// with pairs of valid normal forms.
SyncRelation merge_relation(const LevelRegLang& ctx, const RecTraceLang& lhs,
                            const RecTraceLang& rhs, const Budget& budget = Budget());

// Per-label union of merge_relation over the rules.
AutomaticPresentation compile(const RtlSystem& sys, const Budget& budget = Budget());

// Exact regular set of λ-successors of t; empty for an unknown label.
LevelRegLang successors(const AutomaticPresentation& pres, const FoataWord& t,
                        const std::string& label, const Budget& budget = Budget());

struct GraphEdge {
  FoataWord src;
  std::string label;
  FoataWord dst;

  bool operator==(const GraphEdge& o) const {
    return src == o.src && label == o.label && dst == o.dst;
  }
  bool operator<(const GraphEdge& o) const {
    return std::tie(src, label, dst) < std::tie(o.src, o.label, o.dst);
  }
};

struct GraphFragment {
  std::vector<FoataWord> vertices;  // discovery order: breadth-first, length-lex
  std::vector<std::tuple<std::size_t, std::string, std::size_t>> edges;
  bool truncated = false;
};

// Breadth-first exploration from start, labels in sorted order and successor
// sets in length-lex order, so output is deterministic. Vertices beyond
// max_letters letters are out of scope; hitting vertex_budget or an
// unenumerable successor set sets `truncated`. An empty label list means
// every label of the presentation.
GraphFragment bounded_bfs(const AutomaticPresentation& pres, const FoataWord& start,
                          std::size_t vertex_budget, std::size_t max_letters,
                          const std::vector<std::string>& labels = {},
                          const Budget& budget = Budget());

// All traces with at most max_letters letters, grouped by letter count,
// deterministic order within a group.
std::vector<FoataWord> enumerate_traces(const AlphabetRef& alpha,
                                        std::size_t max_letters);

// Direct-definition oracle: every edge (s, λ, t) with both endpoints of at
// most max_letters letters, by enumerating factorizations s = u·v.
std::vector<GraphEdge> brute_force_edges(const RtlSystem& sys, std::size_t max_letters,
                                         const Budget& budget = Budget());

// The same edge set read off the compiled relations, for oracle comparison.
std::vector<GraphEdge> presentation_edges_bounded(const AutomaticPresentation& pres,
                                                  std::size_t max_letters,
                                                  const Budget& budget = Budget());

// -------- 2-counter Minsky machines --------

struct MinskyInstruction {
  enum class Kind { Incr, Decr, Halt };
  Kind kind = Kind::Halt;
  int counter = 0;      // 1 or 2
  int target = 0;       // goto on increment / successful decrement
  int zero_target = 0;  // goto when the counter is zero (Decr only)
};

struct MinskyMachine {
  std::vector<MinskyInstruction> instructions;  // instruction k at index k-1
};

// Text format, one instruction per line, numbered 1..n in order:
//   k: inc <1|2> <j>
//   k: dec <1|2> <j> <l>
//   n: halt
MinskyMachine parse_minsky(const std::string& text);

struct MinskyCompilation {
  RtlSystem system;
  FoataWord initial;            // ⟨[⊥a ⊥b 1]⟩
  RecTraceLang final_configs;   // closure of ⊥a ⊥b a* b* n
  std::string halting_sentence; // ∃x∃y (x→i x ∧ y→f y ∧ x→* y), fo syntax
};

// Counter machine as a rewriting system over {_a,_b,a,b,1..n} with aIb and
// _aI_b: counter steps labelled R, a loop labelled i at the initial
// configuration and one labelled f at [n]. The halting sentence needs the
// reachability label *, which no presentation carries — model checking it
// reports the documented error.
MinskyCompilation compile_minsky(const MinskyMachine& m);

struct MinskyVerdict {
  bool halted = false;
  std::size_t depth = 0;  // R-steps from the initial configuration
  bool truncated = false;
  std::optional<FoataWord> final_config;
};

// Breadth-first halting search over the R relation, up to vertex_budget
// explored configurations; halting = reaching a final-configuration
// encoding.
MinskyVerdict minsky_run(const MinskyMachine& m, std::size_t vertex_budget,
                         const Budget& budget = Budget());

}  // namespace tracta
