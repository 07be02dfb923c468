#include "tracta/cli.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tracta/io.hpp"

using namespace tracta;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("tracta_cli_test_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(TRACTA_DATA_DIR) + "/" + name;
}

bool contains(const std::string& text, const std::string& sub) {
  return text.find(sub) != std::string::npos;
}

}  // namespace

TEST_CASE("cli normalizes and compares words") {
  CliResult r = run({"foata", data("ex1.json"), "acbdab"});
  CHECK(r.code == 0);
  CHECK(r.out == "{a,c}{b,d}{a}{b}\n");
  CHECK(r.err.empty());

  r = run({"foata", data("ex1.json"), "{a,c}{b,d}"});
  CHECK(r.code == 0);
  CHECK(r.out == "{a,c}{b,d}\n");

  r = run({"foata", data("ex1.json"), "acbdab", "--json"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["trace"] == "{a,c}{b,d}{a}{b}");

  r = run({"eq", data("ex1.json"), "acbdab", "cabdab"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");

  r = run({"eq", data("ex1.json"), "acbdab", "ab"});
  CHECK(r.code == 0);
  CHECK(r.out == "not equivalent\n");

  r = run({"eq", data("ex1.json"), "ab", "ba", "--json"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["equivalent"] == false);
}

TEST_CASE("cli compiles a system and reads the bundle back") {
  TempDir tmp;
  std::string bundle = tmp.file("grid.bundle");

  CliResult r = run({"rtl", "compile", data("alexbis.json"), "--out", bundle, "--stats"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "bundle: " + bundle));
  CHECK(contains(r.out, "states built: "));
  CHECK(fs::exists(fs::path(bundle) / "manifest.json"));

  r = run({"rtl", "successors", bundle, "ab", "a"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sample: {a,b}{a}"));
  CHECK(contains(r.out, "automaton:"));

  r = run({"rtl", "successors", bundle, "ab", "a", "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  REQUIRE(j["samples"].size() == 1);
  CHECK(j["samples"][0] == "{a,b}{a}");
  CHECK(j["truncated"] == false);
  CHECK(j["automaton"]["domain"] == "steps-nonempty");

  // Unknown labels have empty successor sets.
  r = run({"rtl", "successors", bundle, "ab", "nope"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "no successors"));

  // Default bundle path: input with extension swapped to .bundle.
  fs::copy_file(data("alexbis.json"), tmp.file("sys.json"));
  r = run({"rtl", "compile", tmp.file("sys.json")});
  CHECK(r.code == 0);
  CHECK(fs::exists(tmp.path / "sys.bundle" / "manifest.json"));

  r = run({"rtl", "compile", tmp.file("sys.json"), "--json"});
  CHECK(r.code == 0);
  Json stats = parse_json(r.out);
  CHECK(stats["bundle"] == tmp.file("sys.bundle"));
  CHECK(stats["states-built"].get<std::size_t>() > 0);
}

TEST_CASE("cli edge listings agree with the direct definition") {
  CliResult r = run({"rtl", "edges", data("alexbis.json"), "--bound", "3", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "OK: 0 differences\n");

  r = run({"rtl", "edges", data("alex.json"), "--bound", "3", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "OK: 0 differences\n");

  r = run({"rtl", "edges", data("alexbis.json"), "--bound", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ε -a-> {a}"));
  CHECK(contains(r.out, "ε -f-> ε"));

  r = run({"rtl", "edges", data("alexbis.json"), "--bound", "1", "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  bool found = false;
  for (const Json& e : j["edges"])
    found = found || (e["src"] == "ε" && e["label"] == "a" && e["dst"] == "{a}");
  CHECK(found);
}

TEST_CASE("cli unfolds automata and model checks the result") {
  TempDir tmp;
  std::string rtl_path = tmp.file("grid_rtl.json");
  std::string bundle = tmp.file("grid_unfold.bundle");

  CliResult r = run({"unfold", "grid", "--out", rtl_path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "wrote "));
  RtlSystem sys = rtl_from_json(parse_json(read_text_file(rtl_path), rtl_path));
  std::vector<std::string> labels = sys.labels();
  CHECK(std::find(labels.begin(), labels.end(), "a") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "f") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "*") != labels.end());

  // Unfolding to stdout parses to the same system.
  r = run({"unfold", "grid"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out) == parse_json(read_text_file(rtl_path), rtl_path));

  r = run({"rtl", "compile", rtl_path, "--out", bundle});
  CHECK(r.code == 0);

  // Every grid vertex can append a letter; reachability is automatic for
  // unfoldings, so * questions are answerable.
  r = run({"fo", "check", bundle, "A x. E y. edge(a,x,y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run({"fo", "check", bundle, "E x. E y. edge(*,x,y) & !(x = y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  // The bundled grid automaton accepts nothing, so f loops nowhere.
  r = run({"fo", "check", bundle, "E x. edge(f,x,x)"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  // The compiled grid system carries the diagonal f loop instead.
  TempDir tmp2;
  std::string sys_bundle = tmp2.file("grid_sys.bundle");
  r = run({"rtl", "compile", data("alexbis.json"), "--out", sys_bundle});
  CHECK(r.code == 0);
  r = run({"fo", "check", sys_bundle, "E x. edge(f,x,x)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  // Witnesses assign the free variables, length-lex least first.
  r = run({"fo", "check", sys_bundle, "edge(f,x,x)", "--witness"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "true"));
  CHECK(contains(r.out, "x = ε"));

  r = run({"fo", "check", sys_bundle, "edge(f,x,x)", "--witness", "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["truth"] == true);
  CHECK(j["witness"]["x"] == "ε");

  // Formulas may come from a file.
  std::string ffile = tmp2.file("sentence.fo");
  write_text_file(ffile, "A x. A y. (edge(f,x,y) -> x = y)\n");
  r = run({"fo", "check", sys_bundle, ffile});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
}

TEST_CASE("cli answers event-structure queries") {
  CliResult r = run({"es", data("ab_star.json"), "--query", "le a ab"});
  CHECK(r.code == 0);
  REQUIRE(contains(r.out, "true"));
  CHECK(contains(r.out, "formula: "));

  r = run({"es", data("ab_star.json"), "--query", "conflict a ab"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "false"));

  r = run({"es", data("ab_star.json"), "--query", "label a a", "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["truth"] == true);
  CHECK(j["formula"].is_string());

  r = run({"es", data("ab_star.json"), "--query", "label b a"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "false"));

  r = run({"es", data("ab_star.json"), "--query", "weird a b"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "unknown event-structure query kind"));
}

TEST_CASE("cli explores and decomposes ground-term systems") {
  TempDir tmp;

  CliResult r = run({"gtrs", "explore", data("grid_gtrs.json"), "--budget", "15"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "vertices: 15"));
  CHECK(contains(r.out, "truncated: yes"));
  CHECK(contains(r.out, "c(bot1,bot2) -a-> c(s1(bot1),bot2)"));

  std::string dot_path = tmp.file("grid.dot");
  r = run({"gtrs", "explore", data("grid_gtrs.json"), "--budget", "15", "--dot", dot_path,
           "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["vertices"].size() == 15);
  REQUIRE(j.contains("frontier"));
  CHECK(!j["frontier"].empty());
  std::string dot = read_text_file(dot_path);
  CHECK(contains(dot, "digraph"));
  CHECK(contains(dot, "peripheries=2"));

  // The --json output feeds export dot, frontier ring included.
  std::string frag_path = tmp.file("fragment.json");
  write_text_file(frag_path, r.out);
  r = run({"export", "dot", frag_path});
  CHECK(r.code == 0);
  CHECK(r.out == dot);

  r = run({"gtrs", "decompose", data("grid_gtrs.json"), "--n", "2", "--budget", "30"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "component 0:"));
  CHECK(contains(r.out, "signature classes"));

  r = run({"gtrs", "decompose", data("grid_gtrs.json"), "--n", "2", "--budget", "30",
           "--json"});
  CHECK(r.code == 0);
  j = parse_json(r.out);
  REQUIRE(!j["components"].empty());
  CHECK(j["components"][0].contains("signature"));

  r = run({"gtrs", "tree", frag_path, "--root", "c(bot1,bot2)", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "vertices: "));
  CHECK(contains(r.out, "c(bot1,bot2)"));
}

TEST_CASE("cli compiles and runs counter machines") {
  CliResult r = run({"minsky", "run", data("minsky_inc_halt.txt"), "--budget", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "halts at depth 1\n");

  r = run({"minsky", "run", data("minsky_dec_loop.txt"), "--budget", "10000"});
  CHECK(r.code == 0);
  CHECK(r.out == "no halt within budget\n");

  r = run({"minsky", "run", data("minsky_inc_halt.txt"), "--budget", "100", "--json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["halted"] == true);
  CHECK(j["depth"] == 1);

  TempDir tmp;
  std::string rtl_path = tmp.file("machine.json");
  r = run({"minsky", "compile", data("minsky_inc_halt.txt"), "--out", rtl_path});
  CHECK(r.code == 0);
  Json mj = parse_json(read_text_file(rtl_path), rtl_path);
  REQUIRE(mj.contains("halting-sentence"));
  CHECK(mj.contains("initial"));
  CHECK(mj.contains("final"));

  // The emitted system compiles, but its halting sentence needs the
  // reachability label and is rejected with the documented message.
  std::string bundle = tmp.file("machine.bundle");
  r = run({"rtl", "compile", rtl_path, "--out", bundle});
  CHECK(r.code == 0);
  r = run({"fo", "check", bundle, mj["halting-sentence"].get<std::string>()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "reachability relation not automatic for this system"));
}

TEST_CASE("cli exports bundles as dot graphs") {
  TempDir tmp;
  std::string bundle = tmp.file("grid.bundle");
  CliResult r = run({"rtl", "compile", data("alexbis.json"), "--out", bundle});
  REQUIRE(r.code == 0);

  r = run({"export", "dot", bundle, "--bound", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "digraph"));
  CHECK(contains(r.out, "ε"));
  CHECK(contains(r.out, "{a,b}"));

  std::string dot_path = tmp.file("grid.dot");
  r = run({"export", "dot", bundle, "--bound", "2", "--out", dot_path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "wrote "));
  CHECK(contains(read_text_file(dot_path), "digraph"));
}

TEST_CASE("cli selftest passes deterministically") {
  CliResult r = run({"selftest", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ok: foata normalization"));
  CHECK(contains(r.out, "ok: concatenation and division"));
  CHECK(contains(r.out, "ok: finite languages and residuals"));
  CHECK(contains(r.out, "ok: compiled rewriting relations"));
  CHECK(contains(r.out, "ok: first-order checks on the chain"));
  CHECK(contains(r.out, "selftest passed (seed 7)"));

  CliResult again = run({"selftest", "--seed", "7"});
  CHECK(again.out == r.out);
}

TEST_CASE("cli maps errors onto stable exit codes") {
  // Parse failures: missing files, bad usage, malformed queries.
  CliResult r = run({"foata", "/nonexistent/alphabet.json", "ab"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error: "));

  r = run({"bogus"});
  CHECK(r.code == 1);

  r = run({"rtl"});
  CHECK(r.code == 1);

  r = run({});
  CHECK(r.code == 1);

  // Invariant violations: a word language that is not closed under
  // commutation cannot denote a trace language.
  TempDir tmp;
  std::string bad = tmp.file("bad_lang.json");
  write_text_file(bad, R"({
  "alphabet": {"letters": ["a", "b"], "independent": [["a", "b"]]},
  "kind": "recognizable",
  "automaton": {
    "domain": "letters",
    "states": ["q0", "q1", "q2"],
    "initial": "q0",
    "finals": ["q2"],
    "transitions": [["q0", "a", "q1"], ["q1", "b", "q2"]]
  }
})");
  r = run({"es", bad, "--query", "le a b"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error: "));

  // Resource exhaustion: a tiny state budget.
  r = run({"rtl", "compile", data("alexbis.json"), "--state-budget", "2", "--out",
           tmp.file("never.bundle")});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "state budget"));

  // Help is not an error.
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "foata"));
}
