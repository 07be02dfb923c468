#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracta/gtrs.hpp"
#include "tracta/rtl.hpp"
#include "tracta/unfold.hpp"

namespace tracta {

// Insertion-ordered JSON, so object key order survives a round trip; the
// order of a GTRS's "ranked" object is its symbol order, which term
// enumeration follows.
using Json = nlohmann::ordered_json;

// Wraps nlohmann parsing: malformed text raises ParseError naming `where`.
Json parse_json(const std::string& text, const std::string& where = "input");
// 2-space pretty print with a trailing newline.
std::string dump_json(const Json& j);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

// {"letters": ["a","b"], "independent": [["a","b"], ...]} — dependence is the
// complement of the listed pairs plus all reflexive pairs.
Json alphabet_to_json(const AlphabetRef& a);
AlphabetRef alphabet_from_json(const Json& j);

// {"domain": D, "states": ["q0",...], "initial": "q0", "finals": [...],
//  "transitions": [["q0", SYM, "q1"], ...]}.
// D is "letters", "steps", "steps-nonempty", or "tuple(BASE,ARITY)". A symbol
// is a letter name under letters; an array of pairwise-independent letter
// names under the step domains (the empty array is the empty step, legal only
// under "steps"); an ARITY-sized array whose entries are base symbols or the
// pad "#" under a tuple domain. A nondeterministic transition list is
// determinized on load; states keep their listed order otherwise.
Json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const AlphabetRef& alpha, const Json& j,
                  const Budget& budget = Budget());

// Language specification, nested inside rules or under an "alphabet" key:
//   {"kind": "recognizable", "automaton": ...}   word automaton over letters
//   {"kind": "level-regular", "automaton": ...}  automaton over nonempty steps
//   {"kind": "finite", "traces": ["ab", ...]}    linearization list
// Writing always emits the canonical automaton form.
Json rec_lang_to_spec(const RecTraceLang& lang);
// Accepts recognizable and finite; level-regular is rejected here because the
// result must be a trace-closed word language.
RecTraceLang rec_lang_from_spec(const AlphabetRef& alpha, const Json& j,
                                const Budget& budget = Budget());
Json level_lang_to_spec(const LevelRegLang& lang);
// Accepts all three kinds; recognizable input becomes its set of normal forms.
LevelRegLang level_lang_from_spec(const AlphabetRef& alpha, const Json& j,
                                  const Budget& budget = Budget());

// Standalone language file: the specification plus an "alphabet" member.
Json rec_lang_to_json(const RecTraceLang& lang);
RecTraceLang rec_lang_from_json(const Json& j, const Budget& budget = Budget());

// {"alphabet": ..., "labels": [...], "rules": [{"label": ..., "context": SPEC,
//  "lhs": SPEC, "rhs": SPEC}, ...]}. Labels absent from every rule come back
// as extra labels with empty relations.
Json rtl_to_json(const RtlSystem& sys);
RtlSystem rtl_from_json(const Json& j, const Budget& budget = Budget());

// {"alphabet": ..., "states": [...], "initial": "p", "finals": [...],
//  "transitions": [["p","a","q"], ...]}; parsing validates determinism and
// the independence diamond.
Json concurrent_to_json(const ConcurrentAutomaton& a);
ConcurrentAutomaton concurrent_from_json(const Json& j);

// {"ranked": {"c": 2, ...}, "labels": [...], "initial": "c(bot1,bot2)",
//  "rules": [{"label": ..., "lhs": ..., "rhs": ...}]}; terms in prefix
// notation with parentheses.
Json gtrs_to_json(const Gtrs& g);
Gtrs gtrs_from_json(const Json& j);

// {"vertices": [...], "edges": [[SRC, LABEL, DST], ...] by vertex name,
//  "truncated": bool}. Parsing restores sorted, deduplicated edges.
Json fragment_to_json(const TermGraphFragment& f);
TermGraphFragment fragment_from_json(const Json& j);

// The trace-graph fragment with vertices rendered to their normal-form
// names, so one fragment shape serves both graph kinds.
TermGraphFragment named_fragment(const GraphFragment& f);

// DOT digraph; vertices listed in `frontier` (by index) are double-circled.
std::string fragment_to_dot(const TermGraphFragment& f,
                            const std::vector<int>& frontier = {});

// A presentation bundle is a directory: manifest.json carries the alphabet
// and names one automaton file for the vertex language plus one pair-relation
// file per label, so relations load lazily and stay individually inspectable.
void write_bundle(const AutomaticPresentation& pres, const std::filesystem::path& dir);
AutomaticPresentation read_bundle(const std::filesystem::path& dir,
                                  const Budget& budget = Budget());

// A trace from either a linearization ("acbdab") or a rendered normal form
// ("{a,c}{b,d}", "ε"); the braces form must itself be ▷-chained.
FoataWord parse_trace(const AlphabetRef& alpha, const std::string& text);

}  // namespace tracta
