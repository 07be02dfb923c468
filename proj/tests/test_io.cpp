#include "tracta/io.hpp"

#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"

using namespace tracta;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("tracta_io_test_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RecTraceLang finite(const AlphabetRef& al, const std::vector<std::string>& words) {
  std::vector<FoataWord> ts;
  for (const auto& w : words) ts.push_back(foata_normalize(al, w));
  return RecTraceLang::from_finite(al, ts);
}

// a and b append a letter anywhere; f loops on the diagonal {a,b}^k; z is a
// declared label with no rule.
RtlSystem small_grid_system() {
  AlphabetRef al = th::ab_indep();
  Dfa diag(Domain::steps_nonempty(al));
  State s0 = diag.add_state(true);
  diag.initial = s0;
  diag.add_arc(s0, Symbol{StepMask(bit(0) | bit(1))}, s0);
  RtlSystem sys{al, {}, {"z"}};
  sys.rules.push_back(make_rule("a", LevelRegLang::full(al), finite(al, {""}),
                                finite(al, {"a"})));
  sys.rules.push_back(make_rule("b", LevelRegLang::full(al), finite(al, {""}),
                                finite(al, {"b"})));
  sys.rules.push_back(make_rule("f", LevelRegLang::from_step_dfa(al, diag),
                                finite(al, {""}), finite(al, {""})));
  return sys;
}

}  // namespace

TEST_CASE("json text and file plumbing") {
  Json j = parse_json("{\"a\": [1, 2]}");
  CHECK(j["a"].size() == 2);
  CHECK_THROWS_AS(parse_json("{oops", "broken.json"), ParseError);
  try {
    parse_json("{oops", "broken.json");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
  std::string text = dump_json(j);
  CHECK(text.back() == '\n');
  CHECK(parse_json(text) == j);

  TempDir tmp;
  write_text_file(tmp.path / "x.json", text);
  CHECK(read_text_file(tmp.path / "x.json") == text);
  CHECK_THROWS_AS(read_text_file(tmp.path / "missing.json"), ParseError);
  CHECK_THROWS_AS(read_text_file(tmp.path), ParseError);
}

TEST_CASE("alphabet json round trips") {
  AlphabetRef al = th::ex1();
  Json j = alphabet_to_json(al);
  CHECK(j["letters"] == Json::array({"a", "b", "c", "d"}));
  CHECK(j["independent"].size() == 3);
  AlphabetRef back = alphabet_from_json(j);
  CHECK(same_alphabet(al, back));

  // Full dependence needs no "independent" member.
  AlphabetRef dep = alphabet_from_json(parse_json("{\"letters\": [\"a\", \"b\"]}"));
  CHECK(dep->dependent(0, 1));

  CHECK_THROWS_AS(alphabet_from_json(parse_json("{}")), ParseError);
  CHECK_THROWS_AS(alphabet_from_json(parse_json("{\"letters\": \"ab\"}")), ParseError);
  CHECK_THROWS_AS(
      alphabet_from_json(parse_json(
          "{\"letters\": [\"a\",\"b\"], \"independent\": [[\"a\"]]}")),
      ParseError);
  // Unknown letter in a pair is caught by alphabet construction.
  CHECK_THROWS_AS(
      alphabet_from_json(parse_json(
          "{\"letters\": [\"a\",\"b\"], \"independent\": [[\"a\",\"x\"]]}")),
      Error);
}

TEST_CASE("automata serialize across symbol domains") {
  AlphabetRef al = th::ex1();

  // Letters: symbols are plain strings.
  RecTraceLang words = finite(al, {"ab", "ba"});
  Json jw = dfa_to_json(words.word_dfa());
  CHECK(jw["domain"] == "letters");
  CHECK(jw["transitions"][0][1].is_string());
  Dfa dw = dfa_from_json(al, jw);
  CHECK(same_dfa(dw, words.word_dfa()));

  // Nonempty steps: symbols are arrays of letter names.
  Dfa steps = LevelRegLang::full(al).step_dfa();
  Json js = dfa_to_json(steps);
  CHECK(js["domain"] == "steps-nonempty");
  CHECK(js["transitions"][0][1].is_array());
  CHECK(same_dfa(dfa_from_json(al, js), steps));

  // Steps with ∅: the empty array is a legal symbol.
  Dfa sat = step_saturate(words);
  Json jsat = dfa_to_json(sat);
  CHECK(jsat["domain"] == "steps");
  bool has_empty = false;
  for (const Json& t : jsat["transitions"])
    if (t[1].is_array() && t[1].empty()) has_empty = true;
  CHECK(has_empty);
  CHECK(same_dfa(dfa_from_json(al, jsat), sat));

  // Pairs: two-entry arrays with "#" padding.
  Dfa verts = LevelRegLang::full(al).step_dfa();
  Dfa pairs = all_pairs(verts).pair_dfa();
  Json jp = dfa_to_json(pairs);
  CHECK(jp["domain"] == "tuple(steps-nonempty,2)");
  bool has_pad = false;
  for (const Json& t : jp["transitions"]) {
    CHECK(t[1].is_array());
    CHECK(t[1].size() == 2);
    if (t[1][0] == "#" || t[1][1] == "#") has_pad = true;
  }
  CHECK(has_pad);
  CHECK(same_dfa(dfa_from_json(al, jp), pairs));

  // A nondeterministic transition list is determinized, keeping the language.
  Json nd = parse_json(R"({
    "domain": "letters",
    "states": ["s", "t", "u"],
    "initial": "s",
    "finals": ["t", "u"],
    "transitions": [["s", "a", "t"], ["s", "a", "u"], ["u", "b", "u"]]
  })");
  Dfa det = dfa_from_json(al, nd);
  CHECK(det.accepts({0}));
  CHECK(det.accepts({0, 1}));
  CHECK(det.accepts({0, 1, 1}));
  CHECK_FALSE(det.accepts({1}));
  CHECK_FALSE(det.accepts({}));

  auto reject = [&](const char* text) {
    CHECK_THROWS_AS(dfa_from_json(al, parse_json(text)), ParseError);
  };
  reject(R"({"domain":"words","states":["q"],"initial":"q","finals":[],"transitions":[]})");
  reject(R"({"domain":"letters","states":["q","q"],"initial":"q","finals":[],"transitions":[]})");
  reject(R"({"domain":"letters","states":["q"],"initial":"r","finals":[],"transitions":[]})");
  reject(R"({"domain":"letters","states":["q"],"initial":"q","finals":[],"transitions":[["q","x","q"]]})");
  reject(R"({"domain":"steps-nonempty","states":["q"],"initial":"q","finals":[],"transitions":[["q",[],"q"]]})");
  reject(R"({"domain":"steps-nonempty","states":["q"],"initial":"q","finals":[],"transitions":[["q",["a","b"],"q"]]})");
  reject(R"({"domain":"steps-nonempty","states":["q"],"initial":"q","finals":[],"transitions":[["q",["a","a"],"q"]]})");
  reject(R"x({"domain":"tuple(steps-nonempty,2)","states":["q"],"initial":"q","finals":[],"transitions":[["q",["#","#"],"q"]]})x");
  reject(R"x({"domain":"tuple(steps-nonempty,2)","states":["q"],"initial":"q","finals":[],"transitions":[["q",[["a"]],"q"]]})x");
  reject(R"({"domain":"letters","states":["q"],"initial":"q","finals":[],"transitions":[["q","a"]]})");
}

TEST_CASE("trace language specifications round trip") {
  AlphabetRef al = th::ex1();

  RecTraceLang rec = finite(al, {"acbdab", "ab"});
  Json jr = rec_lang_to_spec(rec);
  CHECK(jr["kind"] == "recognizable");
  CHECK(rec_lang_from_spec(al, jr) == rec);

  LevelRegLang lvl = foata_encoding(rec);
  Json jl = level_lang_to_spec(lvl);
  CHECK(jl["kind"] == "level-regular");
  CHECK(level_lang_from_spec(al, jl) == lvl);

  // Finite specifications are linearization lists.
  Json jf = parse_json(R"({"kind": "finite", "traces": ["ab", "ba"]})");
  CHECK(rec_lang_from_spec(al, jf) == finite(al, {"ab", "ba"}));
  CHECK(level_lang_from_spec(al, jf) ==
        LevelRegLang::from_finite(al, {foata_normalize(al, "ab"),
                                       foata_normalize(al, "ba")}));

  // A recognizable spec in level position becomes its normal forms.
  CHECK(level_lang_from_spec(al, jr) == lvl);
  // A level-regular spec cannot stand where a word language is needed.
  CHECK_THROWS_AS(rec_lang_from_spec(al, jl), ParseError);
  CHECK_THROWS_AS(rec_lang_from_spec(al, parse_json(R"({"kind": "odd"})")),
                  ParseError);

  // The word automaton of a recognizable language must be trace-closed.
  AlphabetRef ab = th::ab_indep();
  Json half = parse_json(R"({
    "kind": "recognizable",
    "automaton": {
      "domain": "letters",
      "states": ["q0", "q1", "q2"],
      "initial": "q0",
      "finals": ["q2"],
      "transitions": [["q0", "a", "q1"], ["q1", "b", "q2"]]
    }
  })");
  CHECK_THROWS_AS(rec_lang_from_spec(ab, half), InvariantError);

  // Standalone files carry their own alphabet.
  Json file = rec_lang_to_json(rec);
  CHECK(same_alphabet(alphabet_from_json(file["alphabet"]), al));
  CHECK(rec_lang_from_json(file) == rec);
}

TEST_CASE("rewriting systems round trip") {
  RtlSystem sys = small_grid_system();
  Json j = rtl_to_json(sys);
  CHECK(j["labels"] == Json::array({"a", "b", "f", "z"}));

  RtlSystem back = rtl_from_json(j);
  CHECK(same_alphabet(back.alpha, sys.alpha));
  CHECK(back.labels() == sys.labels());
  CHECK(back.extra_labels == std::vector<std::string>{"z"});
  REQUIRE(back.rules.size() == sys.rules.size());
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    CHECK(back.rules[i].label == sys.rules[i].label);
    CHECK(back.rules[i].context == sys.rules[i].context);
    CHECK(back.rules[i].lhs == sys.rules[i].lhs);
    CHECK(back.rules[i].rhs == sys.rules[i].rhs);
  }

  // Written form re-parses to the same document.
  CHECK(rtl_to_json(back) == j);

  // Hand-written finite kinds.
  Json jt = parse_json(R"({
    "alphabet": {"letters": ["a", "b"], "independent": [["a", "b"]]},
    "rules": [{
      "label": "r",
      "context": {"kind": "finite", "traces": ["", "a"]},
      "lhs": {"kind": "finite", "traces": [""]},
      "rhs": {"kind": "finite", "traces": ["b"]}
    }]
  })");
  RtlSystem fin = rtl_from_json(jt);
  AlphabetRef ab = fin.alpha;
  CHECK(fin.labels() == std::vector<std::string>{"r"});
  CHECK(fin.rules[0].context ==
        LevelRegLang::from_finite(ab, {FoataWord(ab), foata_normalize(ab, "a")}));
  CHECK(fin.rules[0].rhs == finite(ab, {"b"}));

  CHECK_THROWS_AS(rtl_from_json(parse_json(R"({"rules": []})")), ParseError);
}

TEST_CASE("concurrent automata round trip") {
  for (const char* name : {"grid", "grid-tree", "residual:(ab)*"}) {
    ConcurrentAutomaton a = bundled_automaton(name);
    ConcurrentAutomaton back = concurrent_from_json(concurrent_to_json(a));
    CHECK(same_alphabet(back.alpha, a.alpha));
    CHECK(back.num_states == a.num_states);
    CHECK(back.initial == a.initial);
    CHECK(back.finals == a.finals);
    CHECK(back.arcs == a.arcs);
  }

  // Determinism and the independence diamond are checked on load.
  Json broken = parse_json(R"({
    "alphabet": {"letters": ["a", "b"], "independent": [["a", "b"]]},
    "states": ["p", "q", "r"],
    "initial": "p",
    "finals": [],
    "transitions": [["p", "a", "q"], ["q", "b", "r"]]
  })");
  CHECK_THROWS_AS(concurrent_from_json(broken), InvariantError);
  Json badletter = parse_json(R"({
    "alphabet": {"letters": ["a"]},
    "states": ["p"],
    "initial": "p",
    "finals": [],
    "transitions": [["p", "x", "p"]]
  })");
  CHECK_THROWS_AS(concurrent_from_json(badletter), ParseError);
}

TEST_CASE("ground-term systems round trip") {
  Gtrs g = grid_gtrs();
  Json j = gtrs_to_json(g);
  CHECK(j["ranked"].begin().key() == "c");  // symbol order survives
  CHECK(j["initial"] == "c(bot1,bot2)");

  Gtrs back = gtrs_from_json(j);
  CHECK(gtrs_to_json(back) == j);
  CHECK(explore(back, 15) == explore(g, 15));

  CHECK_THROWS_AS(gtrs_from_json(parse_json(
                      R"({"ranked": {"z": 0}, "labels": ["a"], "initial": "z",
                          "rules": [{"label": "a", "lhs": "z", "rhs": "w"}]})")),
                  ParseError);
  CHECK_THROWS_AS(gtrs_from_json(parse_json(
                      R"({"ranked": {"z": -1}, "labels": [], "initial": "z",
                          "rules": []})")),
                  ParseError);
  // Equal rule sides violate system validity, not syntax.
  CHECK_THROWS_AS(gtrs_from_json(parse_json(
                      R"({"ranked": {"z": 0}, "labels": ["a"], "initial": "z",
                          "rules": [{"label": "a", "lhs": "z", "rhs": "z"}]})")),
                  InvariantError);
}

TEST_CASE("fragments round trip and render to dot") {
  Gtrs g = grid_gtrs();
  TermGraphFragment f = explore(g, 15);
  Json j = fragment_to_json(f);
  CHECK(fragment_from_json(j) == f);
  CHECK(j["truncated"] == true);

  // The truncated flag may be omitted on input.
  TermGraphFragment two = fragment_from_json(parse_json(
      R"({"vertices": ["x", "y"], "edges": [["x", "a", "y"], ["x", "a", "y"]]})"));
  CHECK(two.edges.size() == 1);  // duplicates collapse
  CHECK_FALSE(two.truncated);

  CHECK_THROWS_AS(fragment_from_json(parse_json(
                      R"({"vertices": ["x", "x"], "edges": []})")),
                  ParseError);
  CHECK_THROWS_AS(fragment_from_json(parse_json(
                      R"({"vertices": ["x"], "edges": [["x", "a", "y"]]})")),
                  ParseError);

  std::string dot = fragment_to_dot(two, {1});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("peripheries=2") != std::string::npos);
  CHECK(dot.find("v0 -> v1 [label=\"a\"]") != std::string::npos);

  TermGraphFragment quoted;
  quoted.vertices = {"say \"hi\""};
  CHECK(fragment_to_dot(quoted).find("say \\\"hi\\\"") != std::string::npos);
}

TEST_CASE("trace-graph fragments get named vertices") {
  AutomaticPresentation pres = compile(small_grid_system());
  GraphFragment ball =
      bounded_bfs(pres, FoataWord(pres.alpha), 10, 4, {"a", "b"});
  TermGraphFragment named = named_fragment(ball);
  REQUIRE(named.vertices.size() == ball.vertices.size());
  CHECK(named.vertices[0] == "ε");
  CHECK(named.vertices[1] == "{a}");
  CHECK(fragment_from_json(fragment_to_json(named)) == named);
}

TEST_CASE("presentation bundles round trip") {
  AutomaticPresentation pres = compile(small_grid_system());
  TempDir tmp;
  fs::path dir = tmp.path / "grid.bundle";
  write_bundle(pres, dir);
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(fs::exists(dir / "vertices.json"));
  CHECK(fs::exists(dir / "rel_a.json"));
  CHECK(fs::exists(dir / "rel_z.json"));

  AutomaticPresentation back = read_bundle(dir);
  CHECK(same_alphabet(back.alpha, pres.alpha));
  CHECK(back.vertices == pres.vertices);
  REQUIRE(back.relations.size() == pres.relations.size());
  for (const auto& [label, rel] : pres.relations) {
    REQUIRE(back.relations.count(label));
    CHECK(back.relations.at(label) == rel);
  }

  CHECK_THROWS_AS(read_bundle(tmp.path / "nowhere.bundle"), ParseError);
}

TEST_CASE("traces parse from linearizations and rendered forms") {
  AlphabetRef al = th::ex1();
  FoataWord t = parse_trace(al, "acbdab");
  CHECK(t.render() == "{a,c}{b,d}{a}{b}");
  CHECK(parse_trace(al, "{a,c}{b,d}{a}{b}") == t);
  CHECK(parse_trace(al, "{a, c} {b,d} {a} {b}") == t);
  CHECK(parse_trace(al, "ε").empty());
  CHECK(parse_trace(al, "").empty());
  CHECK(parse_trace(al, "  ").empty());

  CHECK_THROWS_AS(parse_trace(al, "{a,c"), ParseError);
  CHECK_THROWS_AS(parse_trace(al, "{a,,c}"), ParseError);
  CHECK_THROWS_AS(parse_trace(al, "{a,x}"), ParseError);
  CHECK_THROWS_AS(parse_trace(al, "{a,a}"), ParseError);
  CHECK_THROWS_AS(parse_trace(al, "axe"), ParseError);
  // {a}{c} is no normal form: c is independent of a, so the steps never chain.
  CHECK_THROWS_AS(parse_trace(al, "{a}{c}"), InvariantError);
  // {a,b} is no step at all: its letters depend on each other.
  CHECK_THROWS_AS(parse_trace(al, "{a,b}"), InvariantError);
}
