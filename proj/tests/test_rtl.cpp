#include "tracta/rtl.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace tracta;

namespace {

FoataWord fw(const AlphabetRef& al, std::string_view text) {
  return foata_normalize(al, text);
}

RecTraceLang finite(const AlphabetRef& al, const std::vector<std::string>& words) {
  std::vector<FoataWord> ts;
  for (const auto& w : words) ts.push_back(foata_normalize(al, w));
  return RecTraceLang::from_finite(al, ts);
}

LevelRegLang level_finite(const AlphabetRef& al, const std::vector<std::string>& words) {
  std::vector<FoataWord> ts;
  for (const auto& w : words) ts.push_back(foata_normalize(al, w));
  return LevelRegLang::from_finite(al, ts);
}

// The infinite-grid system: a and b append a letter anywhere, f loops on the
// diagonal ⟨(ab)^k⟩ = {a,b}^k.
RtlSystem grid_system() {
  AlphabetRef al = th::ab_indep();
  Dfa diag(Domain::steps_nonempty(al));
  State s0 = diag.add_state(true);
  diag.initial = s0;
  diag.add_arc(s0, Symbol{StepMask(bit(0) | bit(1))}, s0);
  LevelRegLang diagonal = LevelRegLang::from_step_dfa(al, diag);
  RtlSystem sys{al, {}, {}};
  sys.rules.push_back(make_rule("a", LevelRegLang::full(al), finite(al, {""}),
                                finite(al, {"a"})));
  sys.rules.push_back(make_rule("b", LevelRegLang::full(al), finite(al, {""}),
                                finite(al, {"b"})));
  sys.rules.push_back(make_rule("f", diagonal, finite(al, {""}), finite(al, {""})));
  return sys;
}

// Three free-commuting letters; a appends a whole abc block, b and c strip
// letters inside contexts of the shape ⟨(abc)^k (ac)^m⟩.
RtlSystem alex_system() {
  AlphabetRef al = th::free_comm(3);
  StepMask abc = StepMask(bit(0) | bit(1) | bit(2));
  StepMask ac = StepMask(bit(0) | bit(2));

  Dfa c1(Domain::steps_nonempty(al));
  State u0 = c1.add_state(true);
  c1.initial = u0;
  c1.add_arc(u0, Symbol{abc}, u0);
  LevelRegLang blocks = LevelRegLang::from_step_dfa(al, c1);

  Dfa c2(Domain::steps_nonempty(al));
  State v0 = c2.add_state(true), v1 = c2.add_state(true);
  c2.initial = v0;
  c2.add_arc(v0, Symbol{abc}, v0);
  c2.add_arc(v0, Symbol{ac}, v1);
  c2.add_arc(v1, Symbol{ac}, v1);
  LevelRegLang blocks_then_pairs = LevelRegLang::from_step_dfa(al, c2);

  RtlSystem sys{al, {}, {}};
  sys.rules.push_back(make_rule("a", blocks, finite(al, {""}), finite(al, {"abc"})));
  sys.rules.push_back(make_rule("b", blocks_then_pairs, finite(al, {"b"}), finite(al, {""})));
  sys.rules.push_back(make_rule("c", blocks_then_pairs, finite(al, {"ac"}), finite(al, {""})));
  return sys;
}

void check_oracle(const RtlSystem& sys, std::size_t max_letters) {
  AutomaticPresentation pres = compile(sys);
  std::vector<GraphEdge> got = presentation_edges_bounded(pres, max_letters);
  std::vector<GraphEdge> want = brute_force_edges(sys, max_letters);
  REQUIRE(got.size() == want.size());
  CHECK(got == want);
}

}  // namespace

TEST_CASE("merging the trivial rule gives the identity on the empty trace") {
  AlphabetRef al = th::ab_indep();
  LevelRegLang u = level_finite(al, {""});
  RecTraceLang e = finite(al, {""});
  SyncRelation r = merge_relation(u, e, e);
  CHECK(pair_membership(r, {}, {}));
  CHECK_FALSE(r.is_empty_rel());
  // The only pair word is the empty one.
  CHECK(enumerate_words(r.pair_dfa(), 4, 10).size() == 1);
}

TEST_CASE("inserted letters may not jump past later context steps") {
  // aDb, bDc, aIc. With context {[ab]} and lhs {[c]}, the only product is
  // [ab]·[c] = [abc] with normal form {a}{b}{c}. The word {a,c}{b} satisfies
  // the per-level containment conditions yet denotes [acb] ≠ [abc]; the
  // accumulator guard must reject it.
  AlphabetRef al = th::abc_chain();
  LevelRegLang u = level_finite(al, {"ab"});
  SyncRelation r = merge_relation(u, finite(al, {"c"}), finite(al, {""}));

  LevelRegLang left = LevelRegLang::from_step_dfa(al, project_left(r));
  CHECK(left == level_finite(al, {"abc"}));

  FoataWord good = fw(al, "abc");
  CHECK(good.steps() == std::vector<StepMask>{bit(0), bit(1), bit(2)});
  CHECK(left.contains(good));

  FoataWord spurious(al, {StepMask(bit(0) | bit(2)), bit(1)});  // {a,c}{b}
  CHECK_FALSE(left.contains(spurious));

  // Exhaustive: no other normal form of ≤ 3 steps sneaks in.
  std::vector<FoataWord> members = left.enumerate(3, 100);
  REQUIRE(members.size() == 1);
  CHECK(members[0] == good);

  // Right side is the bare context.
  LevelRegLang right = LevelRegLang::from_step_dfa(al, project_right(r));
  CHECK(right == level_finite(al, {"ab"}));
}

TEST_CASE("merge over a full context relates a trace to its extensions") {
  AlphabetRef al = th::ab_indep();
  SyncRelation r =
      merge_relation(LevelRegLang::full(al), finite(al, {""}), finite(al, {"a"}));
  // ⟨[ab]⟩ ⊗ ⟨[ab]·[a]⟩ = {a,b} ⊗ {a,b}{a}
  CHECK(pair_membership(r, step_word(fw(al, "ab")), step_word(fw(al, "aba"))));
  CHECK(pair_membership(r, step_word(fw(al, "")), step_word(fw(al, "a"))));
  CHECK_FALSE(pair_membership(r, step_word(fw(al, "ab")), step_word(fw(al, "abb"))));
  CHECK_FALSE(pair_membership(r, step_word(fw(al, "a")), step_word(fw(al, "a"))));
}

TEST_CASE("the grid system compiles to the expected relations") {
  RtlSystem sys = grid_system();
  const AlphabetRef& al = sys.alpha;
  AutomaticPresentation pres = compile(sys);
  REQUIRE(pres.relations.count("f") == 1);

  // f is the identity on the diagonal.
  CHECK(pres.relations.at("f") == identity(sys.rules[2].context.step_dfa()));
  CHECK(successors(pres, fw(al, "ab"), "f") == level_finite(al, {"ab"}));
  CHECK(successors(pres, fw(al, ""), "f") == level_finite(al, {""}));
  CHECK(successors(pres, fw(al, "a"), "f").is_empty_lang());

  CHECK(successors(pres, fw(al, ""), "a") == level_finite(al, {"a"}));
  CHECK(successors(pres, fw(al, "ab"), "b") == level_finite(al, {"abb"}));
  CHECK(successors(pres, fw(al, "ab"), "nope").is_empty_lang());

  // Every relation stays inside pairs of valid normal forms.
  SyncRelation everything = all_pairs(LevelRegLang::full(al).step_dfa());
  for (const auto& kv : pres.relations)
    CHECK(difference(kv.second, everything).is_empty_rel());
}

TEST_CASE("bounded exploration of the grid is deterministic and flags truncation") {
  RtlSystem sys = grid_system();
  const AlphabetRef& al = sys.alpha;
  AutomaticPresentation pres = compile(sys);
  GraphFragment frag = bounded_bfs(pres, fw(al, ""), 6, 4, {"a", "b"});
  REQUIRE(frag.vertices.size() == 6);
  CHECK(frag.truncated);  // the grid goes on
  CHECK(frag.vertices[0] == fw(al, ""));
  CHECK(frag.vertices[1] == fw(al, "a"));
  CHECK(frag.vertices[2] == fw(al, "b"));
  CHECK(std::count(frag.edges.begin(), frag.edges.end(),
                   std::tuple<std::size_t, std::string, std::size_t>{0, "a", 1}) == 1);
  CHECK(std::count(frag.edges.begin(), frag.edges.end(),
                   std::tuple<std::size_t, std::string, std::size_t>{0, "b", 2}) == 1);
  // Every reported edge is a member of its label's relation.
  for (const auto& [i, lab, j] : frag.edges)
    CHECK(pair_membership(pres.relations.at(lab), step_word(frag.vertices[i]),
                          step_word(frag.vertices[j])));

  // The full ball of ≤ 2 letters closes without truncation.
  GraphFragment ball = bounded_bfs(pres, fw(al, ""), 100, 2, {"a", "b"});
  CHECK_FALSE(ball.truncated);
  CHECK(ball.vertices.size() == 6);  // ε, a, b, aa, ab, bb
}

TEST_CASE("two rules with one label contribute to one relation") {
  AlphabetRef al = th::ab_indep();
  RtlSystem sys{al, {}, {}};
  sys.rules.push_back(
      make_rule("x", LevelRegLang::full(al), finite(al, {""}), finite(al, {"a"})));
  sys.rules.push_back(
      make_rule("x", LevelRegLang::full(al), finite(al, {""}), finite(al, {"b"})));
  AutomaticPresentation pres = compile(sys);
  CHECK(successors(pres, fw(al, ""), "x") == level_finite(al, {"a", "b"}));
  CHECK(sys.labels() == std::vector<std::string>{"x"});
}

TEST_CASE("declared labels without rules give empty relations") {
  AlphabetRef al = th::ab_dep();
  RtlSystem sys{al, {}, {"ghost"}};
  AutomaticPresentation pres = compile(sys);
  REQUIRE(pres.relations.count("ghost") == 1);
  CHECK(pres.relations.at("ghost").is_empty_rel());
  CHECK(successors(pres, fw(al, "a"), "ghost").is_empty_lang());
  CHECK(sys.labels() == std::vector<std::string>{"ghost"});
}

TEST_CASE("rule construction rejects mismatched alphabets") {
  AlphabetRef al = th::ab_indep();
  AlphabetRef other = th::ab_dep();
  CHECK_THROWS_AS(make_rule("x", LevelRegLang::full(al), finite(other, {""}),
                            finite(other, {"a"})),
                  InvariantError);
  CHECK_THROWS_AS(
      merge_relation(LevelRegLang::full(al), finite(al, {""}), finite(other, {""})),
      InvariantError);
}

TEST_CASE("trace enumeration is complete and grouped by letter count") {
  AlphabetRef al = th::ex1();
  std::vector<FoataWord> got = enumerate_traces(al, 3);
  std::vector<FoataWord> want = th::all_traces_up_to(al, 3);
  CHECK(got.size() == want.size());
  CHECK(std::set<FoataWord>(got.begin(), got.end()) ==
        std::set<FoataWord>(want.begin(), want.end()));
  for (std::size_t i = 1; i < got.size(); ++i)
    CHECK(got[i - 1].letter_count() <= got[i].letter_count());

  // Free commutative pair: multisets only.
  CHECK(enumerate_traces(th::ab_indep(), 3).size() == 10);
}

TEST_CASE("compiled edges match the brute-force definition") {
  SUBCASE("grid") { check_oracle(grid_system(), 5); }
  SUBCASE("alex") { check_oracle(alex_system(), 5); }
}

TEST_CASE("alex edges contain the published rewrites") {
  RtlSystem sys = alex_system();
  const AlphabetRef& al = sys.alpha;
  AutomaticPresentation pres = compile(sys);
  CHECK(successors(pres, fw(al, ""), "a") == level_finite(al, {"abc"}));
  CHECK(successors(pres, fw(al, "abc"), "b") == level_finite(al, {"ac"}));
  CHECK(successors(pres, fw(al, "abc"), "c").is_empty_lang());
  CHECK(successors(pres, fw(al, "abcac"), "c") == level_finite(al, {"abc"}));
  // [ac] ∈ ⟨(abc)^0 (ac)^1⟩ context, so c can strip it to ε.
  CHECK(successors(pres, fw(al, "ac"), "c") == level_finite(al, {""}));
}

TEST_CASE("random systems agree with the oracle") {
  std::mt19937_64 rng(20260816);
  for (int round = 0; round < 8; ++round) {
    AlphabetRef al = th::random_alphabet(rng, 3);
    auto random_finite = [&](std::size_t max_traces, std::size_t max_len) {
      std::vector<FoataWord> ts;
      std::size_t k = rng() % (max_traces + 1);
      for (std::size_t i = 0; i < k; ++i)
        ts.push_back(foata_normalize(al, th::random_word(rng, al, rng() % (max_len + 1))));
      return RecTraceLang::from_finite(al, ts);
    };
    auto random_context = [&]() {
      switch (rng() % 3) {
        case 0:
          return LevelRegLang::full(al);
        case 1: {
          std::vector<FoataWord> ts;
          std::size_t k = rng() % 3;
          for (std::size_t i = 0; i < k; ++i)
            ts.push_back(foata_normalize(al, th::random_word(rng, al, rng() % 3)));
          return LevelRegLang::from_finite(al, ts);
        }
        default: {
          // Random automaton over nonempty steps; stray step sequences are
          // dropped by the Foata intersection.
          Dfa d(Domain::steps_nonempty(al));
          std::size_t states = 1 + rng() % 3;
          for (std::size_t s = 0; s < states; ++s) d.add_state(rng() % 2 == 0);
          d.initial = 0;
          for (State s = 0; s < states; ++s)
            for (StepMask m : al->steps())
              if (rng() % 2)
                d.add_arc(s, Symbol{m}, static_cast<State>(rng() % states));
          return LevelRegLang::from_step_dfa(al, d);
        }
      }
    };
    RtlSystem sys{al, {}, {}};
    std::size_t nrules = 1 + rng() % 3;
    const char* labels[] = {"x", "y"};
    for (std::size_t i = 0; i < nrules; ++i)
      sys.rules.push_back(make_rule(labels[rng() % 2], random_context(),
                                    random_finite(2, 2), random_finite(2, 2)));
    check_oracle(sys, 4);
  }
}

TEST_CASE("minsky text parsing accepts the format and rejects malformed input") {
  MinskyMachine m = parse_minsky("1: inc 1 2\n2: halt\n");
  REQUIRE(m.instructions.size() == 2);
  CHECK(m.instructions[0].kind == MinskyInstruction::Kind::Incr);
  CHECK(m.instructions[0].counter == 1);
  CHECK(m.instructions[0].target == 2);
  CHECK(m.instructions[1].kind == MinskyInstruction::Kind::Halt);

  MinskyMachine d = parse_minsky("# loops forever\n1: dec 1 1 1\n\n2: halt");
  CHECK(d.instructions[0].kind == MinskyInstruction::Kind::Decr);
  CHECK(d.instructions[0].zero_target == 1);

  CHECK_THROWS_AS(parse_minsky(""), ParseError);
  CHECK_THROWS_AS(parse_minsky("2: halt"), ParseError);              // bad numbering
  CHECK_THROWS_AS(parse_minsky("1: inc 3 1\n2: halt"), ParseError);  // bad counter
  CHECK_THROWS_AS(parse_minsky("1: inc 1 5\n2: halt"), ParseError);  // bad target
  CHECK_THROWS_AS(parse_minsky("1: halt\n2: halt"), ParseError);     // early halt
  CHECK_THROWS_AS(parse_minsky("1: inc 1 2"), ParseError);           // no halt
  CHECK_THROWS_AS(parse_minsky("1: dec 1 2\n2: halt"), ParseError);  // missing arg
}

TEST_CASE("the increment machine halts at depth one") {
  MinskyMachine m = parse_minsky("1: inc 1 2\n2: halt\n");
  MinskyCompilation comp = compile_minsky(m);
  CHECK(comp.system.labels() == std::vector<std::string>{"R", "f", "i"});
  CHECK(comp.halting_sentence ==
        "E x E y (edge(i,x,x) & edge(f,y,y) & edge(*,x,y))");
  CHECK(comp.initial == fw(comp.system.alpha, "_a_b1"));
  CHECK(comp.final_configs.contains(fw(comp.system.alpha, "_a_ba2")));
  CHECK_FALSE(comp.final_configs.contains(comp.initial));

  MinskyVerdict v = minsky_run(m, 100);
  CHECK(v.halted);
  CHECK(v.depth == 1);
  REQUIRE(v.final_config.has_value());
  CHECK(*v.final_config == fw(comp.system.alpha, "_a_ba2"));

  // The i loop marks exactly the initial configuration.
  AutomaticPresentation pres = compile(comp.system);
  CHECK(successors(pres, comp.initial, "i") ==
        LevelRegLang::from_finite(comp.system.alpha, {comp.initial}));
  CHECK(successors(pres, fw(comp.system.alpha, "_a_b2"), "i").is_empty_lang());
}

TEST_CASE("the self-looping decrement machine never halts") {
  MinskyMachine m = parse_minsky("1: dec 1 1 1\n2: halt\n");
  MinskyVerdict v = minsky_run(m, 10000);
  CHECK_FALSE(v.halted);
  CHECK_FALSE(v.truncated);  // the reachable set is a single configuration

  // The zero branch really is a self-loop: _b commutes next to the
  // instruction letter even though the whole marker pair stays up front.
  MinskyCompilation comp = compile_minsky(m);
  AutomaticPresentation pres = compile(comp.system);
  CHECK(successors(pres, comp.initial, "R") ==
        LevelRegLang::from_finite(comp.system.alpha, {comp.initial}));
}

TEST_CASE("a three-instruction machine matches the oracle") {
  MinskyMachine m = parse_minsky("1: inc 1 2\n2: dec 1 3 3\n3: halt\n");
  MinskyCompilation comp = compile_minsky(m);
  check_oracle(comp.system, 4);

  // Simulation: (1,0,0) → (2,1,0) → (3,0,0), halting at depth 2.
  MinskyVerdict v = minsky_run(m, 100);
  CHECK(v.halted);
  CHECK(v.depth == 2);
  CHECK(*v.final_config == fw(comp.system.alpha, "_a_b3"));
}
