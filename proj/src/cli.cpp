#include "tracta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tracta/alphabet.hpp"
#include "tracta/error.hpp"
#include "tracta/fo.hpp"
#include "tracta/gtrs.hpp"
#include "tracta/io.hpp"
#include "tracta/rtl.hpp"
#include "tracta/trace.hpp"
#include "tracta/trace_lang.hpp"
#include "tracta/unfold.hpp"

namespace tracta {
namespace {

namespace fs = std::filesystem;

Json load_json_file(const std::string& path) {
  return parse_json(read_text_file(path), path);
}

Budget make_budget(const std::optional<std::size_t>& cap) {
  return cap ? Budget(*cap) : Budget();
}

std::string edge_line(const GraphEdge& e) {
  return e.src.render() + " -" + e.label + "-> " + e.dst.render();
}

void emit(std::ostream& out, const Json& j) { out << dump_json(j); }

// -------- foata / eq --------

void cmd_foata(const std::string& alphabet_path, const std::string& word, bool json,
               std::ostream& out) {
  AlphabetRef al = alphabet_from_json(load_json_file(alphabet_path));
  FoataWord t = parse_trace(al, word);
  if (json)
    emit(out, Json{{"trace", t.render()}});
  else
    out << t.render() << "\n";
}

void cmd_eq(const std::string& alphabet_path, const std::string& u, const std::string& v,
            bool json, std::ostream& out) {
  AlphabetRef al = alphabet_from_json(load_json_file(alphabet_path));
  bool equivalent = parse_trace(al, u) == parse_trace(al, v);
  if (json)
    emit(out, Json{{"equivalent", equivalent}});
  else
    out << (equivalent ? "equivalent" : "not equivalent") << "\n";
}

// -------- rtl --------

void cmd_rtl_compile(const std::string& path, const std::optional<std::string>& out_dir,
                     bool stats, bool json, const std::optional<std::size_t>& cap,
                     std::ostream& out) {
  Budget budget = make_budget(cap);
  RtlSystem sys = rtl_from_json(load_json_file(path), budget);
  auto t0 = std::chrono::steady_clock::now();
  AutomaticPresentation pres = compile(sys, budget);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  fs::path dir = out_dir ? fs::path(*out_dir) : fs::path(path).replace_extension(".bundle");
  write_bundle(pres, dir);
  if (json) {
    emit(out, Json{{"bundle", dir.string()},
                   {"states-built", budget.used()},
                   {"time-ms", ms}});
  } else {
    out << "bundle: " << dir.string() << "\n";
    if (stats) {
      out << "states built: " << budget.used() << "\n";
      out << "time: " << ms << " ms\n";
    }
  }
}

void cmd_rtl_edges(const std::string& path, std::size_t bound, bool oracle, bool json,
                   const std::optional<std::size_t>& cap, std::ostream& out) {
  Budget budget = make_budget(cap);
  RtlSystem sys = rtl_from_json(load_json_file(path), budget);
  AutomaticPresentation pres = compile(sys, budget);
  std::vector<GraphEdge> got = presentation_edges_bounded(pres, bound, budget);
  if (!oracle) {
    if (json) {
      Json arr = Json::array();
      for (const GraphEdge& e : got)
        arr.push_back(Json{{"src", e.src.render()}, {"label", e.label}, {"dst", e.dst.render()}});
      emit(out, Json{{"edges", arr}});
    } else {
      for (const GraphEdge& e : got) out << edge_line(e) << "\n";
    }
    return;
  }
  std::vector<GraphEdge> want = brute_force_edges(sys, bound, budget);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::vector<GraphEdge> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  if (extra.empty() && missing.empty()) {
    if (json)
      emit(out, Json{{"differences", 0}});
    else
      out << "OK: 0 differences\n";
    return;
  }
  for (const GraphEdge& e : extra) out << "+ " << edge_line(e) << "\n";
  for (const GraphEdge& e : missing) out << "- " << edge_line(e) << "\n";
  throw InvariantError("compiled relations disagree with the direct edge definition: " +
                       std::to_string(extra.size() + missing.size()) + " differences");
}

void cmd_rtl_successors(const std::string& bundle, const std::string& trace,
                        const std::string& label, bool json,
                        const std::optional<std::size_t>& cap, std::ostream& out) {
  Budget budget = make_budget(cap);
  AutomaticPresentation pres = read_bundle(bundle, budget);
  FoataWord t = parse_trace(pres.alpha, trace);
  LevelRegLang lang = successors(pres, t, label, budget);
  bool truncated = false;
  std::vector<FoataWord> samples = lang.enumerate(8, 20, &truncated);
  if (json) {
    Json arr = Json::array();
    for (const FoataWord& s : samples) arr.push_back(s.render());
    emit(out, Json{{"samples", arr},
                   {"truncated", truncated},
                   {"automaton", dfa_to_json(lang.step_dfa())}});
    return;
  }
  if (samples.empty()) out << "no successors\n";
  for (const FoataWord& s : samples) out << "sample: " << s.render() << "\n";
  if (truncated) out << "(more samples beyond the enumeration cap)\n";
  out << "automaton:\n" << dump_json(dfa_to_json(lang.step_dfa()));
}

// -------- fo --------

void cmd_fo_check(const std::string& bundle, const std::string& formula_arg,
                  bool want_witness, bool json, const std::optional<std::size_t>& cap,
                  std::ostream& out) {
  Budget budget = make_budget(cap);
  AutomaticPresentation pres = read_bundle(bundle, budget);
  std::string text = formula_arg;
  if (fs::exists(formula_arg) && !fs::is_directory(formula_arg))
    text = read_text_file(formula_arg);
  FormulaPtr f = parse_formula(text);
  bool truth = false;
  std::map<std::string, FoataWord> bindings;
  if (free_variables(*f).empty() && !want_witness) {
    truth = decide(f, pres, budget);
  } else {
    auto w = witness(f, pres, budget);
    truth = w.has_value();
    if (w) bindings = std::move(*w);
  }
  if (json) {
    Json j{{"truth", truth}};
    if (want_witness && truth) {
      Json w = Json::object();
      for (const auto& [var, val] : bindings) w[var] = val.render();
      j["witness"] = w;
    }
    emit(out, j);
    return;
  }
  out << (truth ? "true" : "false") << "\n";
  if (want_witness && truth)
    for (const auto& [var, val] : bindings) out << var << " = " << val.render() << "\n";
}

// -------- unfold --------

void cmd_unfold(const std::string& name, const std::vector<std::string>& rec_paths,
                const std::optional<std::string>& out_path,
                const std::optional<std::size_t>& cap, std::ostream& out) {
  Budget budget = make_budget(cap);
  ConcurrentAutomaton a = fs::exists(name) ? concurrent_from_json(load_json_file(name))
                                           : bundled_automaton(name);
  std::vector<RecTraceLang> langs;
  for (const std::string& p : rec_paths) {
    RecTraceLang lang = rec_lang_from_json(load_json_file(p), budget);
    if (!same_alphabet(a.alpha, lang.alphabet()))
      throw InvariantError("language alphabet differs from the automaton alphabet: " + p);
    langs.push_back(std::move(lang));
  }
  RtlSystem sys = langs.empty() ? unfold_rtl(a, budget) : unfold_rtl_rec(a, langs, budget);
  Json j = rtl_to_json(sys);
  if (out_path) {
    write_text_file(*out_path, dump_json(j));
    out << "wrote " << *out_path << "\n";
  } else {
    emit(out, j);
  }
}

// -------- es --------

void cmd_es(const std::string& rec_path, const std::string& query, bool json,
            const std::optional<std::size_t>& cap, std::ostream& out) {
  Budget budget = make_budget(cap);
  RecTraceLang rec = rec_lang_from_json(load_json_file(rec_path), budget);
  std::istringstream qs(query);
  std::vector<std::string> tok{std::istream_iterator<std::string>(qs),
                               std::istream_iterator<std::string>()};
  if (tok.empty()) throw ParseError("empty event-structure query");
  const AlphabetRef& al = rec.alphabet();
  auto trace_at = [&](std::size_t i, const char* what) {
    if (i >= tok.size())
      throw ParseError(std::string("event-structure query is missing ") + what);
    return parse_trace(al, tok[i]);
  };
  auto expect_end = [&](std::size_t n) {
    if (tok.size() > n)
      throw ParseError("unexpected trailing tokens in event-structure query");
  };
  EventStructureQuery q;
  if (tok[0] == "le" || tok[0] == "conflict") {
    q.kind = tok[0] == "le" ? EventStructureQuery::Kind::Le
                            : EventStructureQuery::Kind::Conflict;
    q.first.trace = trace_at(1, "the first trace");
    q.second.trace = trace_at(2, "the second trace");
    expect_end(3);
  } else if (tok[0] == "label") {
    q.kind = EventStructureQuery::Kind::Label;
    if (tok.size() < 2) throw ParseError("event-structure query is missing the letter");
    q.letter = tok[1];
    al->letter(q.letter);  // validates the name
    q.first.trace = trace_at(2, "the trace");
    expect_end(3);
  } else {
    throw ParseError("unknown event-structure query kind '" + tok[0] +
                     "' (want le, conflict, or label)");
  }
  EsAnswer ans = es_query(rec, q, budget);
  if (!ans.truth)
    throw InvariantError("event-structure query did not evaluate to a truth value");
  std::string ftext = to_text(*ans.formula);
  if (json)
    emit(out, Json{{"truth", *ans.truth}, {"formula", ftext}});
  else
    out << (*ans.truth ? "true" : "false") << "\n"
        << "formula: " << ftext << "\n";
}

// -------- gtrs --------

// Explored vertices with a one-step rewrite leaving the fragment.
std::vector<int> open_vertices(const Gtrs& g, const TermGraphFragment& f) {
  std::set<std::string> have(f.vertices.begin(), f.vertices.end());
  std::vector<int> open;
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    GroundTerm t = parse_term(g.ranked, f.vertices[i]);
    for (const RewriteStep& s : rewrite_edges(g, t)) {
      if (!have.count(s.target.render())) {
        open.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return open;
}

void print_fragment(const TermGraphFragment& f, std::ostream& out) {
  out << "vertices: " << f.vertices.size() << "\n";
  out << "edges: " << f.edges.size() << "\n";
  out << "truncated: " << (f.truncated ? "yes" : "no") << "\n";
  for (const FragmentEdge& e : f.edges)
    out << f.vertices[e.src] << " -" << e.label << "-> " << f.vertices[e.dst] << "\n";
}

void cmd_gtrs_explore(const std::string& path, int budget_n,
                      const std::optional<std::string>& dot_path, bool json,
                      std::ostream& out) {
  Gtrs g = gtrs_from_json(load_json_file(path));
  TermGraphFragment frag = explore(g, budget_n);
  std::vector<int> frontier = open_vertices(g, frag);
  if (dot_path) write_text_file(*dot_path, fragment_to_dot(frag, frontier));
  if (json) {
    Json j = fragment_to_json(frag);
    Json fr = Json::array();
    for (int i : frontier) fr.push_back(frag.vertices[i]);
    j["frontier"] = fr;
    emit(out, j);
  } else {
    print_fragment(frag, out);
    if (dot_path) out << "wrote " << *dot_path << "\n";
  }
}

void cmd_gtrs_decompose(const std::string& path, int n, int budget_n, bool json,
                        std::ostream& out) {
  Gtrs g = gtrs_from_json(load_json_file(path));
  std::vector<SizeComponent> comps = decompose(g, n, budget_n);
  std::map<std::string, int> tally;
  for (const SizeComponent& c : comps)
    if (!c.approximate) ++tally[c.signature];
  if (json) {
    Json arr = Json::array();
    for (const SizeComponent& c : comps)
      arr.push_back(Json{{"vertices", c.fragment.vertices.size()},
                         {"edges", c.fragment.edges.size()},
                         {"frontier", c.frontier.size()},
                         {"min-size", c.min_size},
                         {"exact", c.exact},
                         {"approximate", c.approximate},
                         {"signature", c.signature}});
    Json sig = Json::object();
    for (const auto& [s, k] : tally) sig[s] = k;
    emit(out, Json{{"components", arr}, {"signatures", sig}});
    return;
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const SizeComponent& c = comps[i];
    out << "component " << i << ": vertices=" << c.fragment.vertices.size()
        << " edges=" << c.fragment.edges.size() << " frontier=" << c.frontier.size()
        << " min_size=" << c.min_size << (c.exact ? " exact" : " heuristic")
        << (c.approximate ? " approximate" : "") << " signature=" << c.signature << "\n";
  }
  out << "signature classes (excluding approximate components):\n";
  for (const auto& [s, k] : tally) out << "  " << k << " x " << s << "\n";
}

void cmd_gtrs_tree(const std::string& path, const std::string& root, int depth, bool json,
                   std::ostream& out) {
  TermGraphFragment f = fragment_from_json(load_json_file(path));
  TermGraphFragment t = tree_of(f, root, depth);
  if (json)
    emit(out, fragment_to_json(t));
  else
    print_fragment(t, out);
}

// -------- minsky --------

void cmd_minsky_compile(const std::string& path, const std::optional<std::string>& out_path,
                        std::ostream& out) {
  MinskyMachine m = parse_minsky(read_text_file(path));
  MinskyCompilation comp = compile_minsky(m);
  Json j = rtl_to_json(comp.system);
  j["initial"] = comp.initial.render();
  j["final"] = rec_lang_to_spec(comp.final_configs);
  j["halting-sentence"] = comp.halting_sentence;
  if (out_path) {
    write_text_file(*out_path, dump_json(j));
    out << "wrote " << *out_path << "\n";
  } else {
    emit(out, j);
  }
}

void cmd_minsky_run(const std::string& path, std::size_t vertex_budget, bool json,
                    const std::optional<std::size_t>& cap, std::ostream& out) {
  MinskyMachine m = parse_minsky(read_text_file(path));
  MinskyVerdict v = minsky_run(m, vertex_budget, make_budget(cap));
  if (json) {
    Json j{{"halted", v.halted}, {"depth", v.depth}, {"truncated", v.truncated}};
    if (v.final_config) j["final"] = v.final_config->render();
    emit(out, j);
    return;
  }
  if (v.halted)
    out << "halts at depth " << v.depth << "\n";
  else
    out << "no halt within budget\n";
}

// -------- export --------

void cmd_export_dot(const std::string& target, const std::optional<std::string>& out_path,
                    std::size_t bound, const std::optional<std::size_t>& cap,
                    std::ostream& out) {
  Budget budget = make_budget(cap);
  std::string dot;
  if (fs::is_directory(target)) {
    AutomaticPresentation pres = read_bundle(target, budget);
    bool truncated = false;
    std::vector<FoataWord> all = pres.vertices.enumerate(bound, 5000, &truncated);
    std::vector<FoataWord> verts;
    for (const FoataWord& t : all)
      if (t.letter_count() <= bound) verts.push_back(t);
    std::map<FoataWord, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);
    std::vector<std::tuple<std::size_t, std::string, std::size_t>> edges;
    for (const GraphEdge& e : presentation_edges_bounded(pres, bound, budget)) {
      auto s = index.find(e.src);
      auto d = index.find(e.dst);
      if (s != index.end() && d != index.end())
        edges.emplace_back(s->second, e.label, d->second);
    }
    GraphFragment frag{std::move(verts), std::move(edges), truncated};
    dot = fragment_to_dot(named_fragment(frag));
  } else {
    Json j = load_json_file(target);
    TermGraphFragment f = fragment_from_json(j);
    std::vector<int> frontier;
    if (j.contains("frontier")) {
      std::map<std::string, int> index;
      for (std::size_t i = 0; i < f.vertices.size(); ++i)
        index.emplace(f.vertices[i], static_cast<int>(i));
      const Json& fr = j.at("frontier");
      if (!fr.is_array()) throw ParseError(target + ": \"frontier\" must be an array");
      for (const Json& name : fr) {
        if (!name.is_string())
          throw ParseError(target + ": frontier entries must be vertex names");
        auto it = index.find(name.get<std::string>());
        if (it == index.end())
          throw ParseError(target + ": frontier vertex not in the fragment: " +
                           name.get<std::string>());
        frontier.push_back(it->second);
      }
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    }
    dot = fragment_to_dot(f, frontier);
  }
  if (out_path) {
    write_text_file(*out_path, dot);
    out << "wrote " << *out_path << "\n";
  } else {
    out << dot;
  }
}

// -------- selftest --------

void cmd_selftest(std::uint32_t seed, const std::optional<std::size_t>& cap,
                  std::ostream& out) {
  std::mt19937 rng(seed);
  Budget budget = make_budget(cap);

  auto fail = [](const char* name) {
    throw InvariantError(std::string("selftest property failed: ") + name);
  };
  auto random_alpha = [&rng](int max_letters) {
    std::uniform_int_distribution<int> dn(2, max_letters);
    int n = dn(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::pair<std::string, std::string>> indep;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) indep.emplace_back(names[i], names[j]);
    return make_alphabet(names, indep);
  };
  auto random_word = [&rng](const AlphabetRef& al, int max_len) {
    std::uniform_int_distribution<int> dl(0, max_len);
    std::uniform_int_distribution<int> dc(0, static_cast<int>(al->size()) - 1);
    std::vector<Letter> w(dl(rng));
    for (Letter& a : w) a = static_cast<Letter>(dc(rng));
    return w;
  };

  for (int round = 0; round < 40; ++round) {
    AlphabetRef al = random_alpha(4);
    std::vector<Letter> w = random_word(al, 6);
    FoataWord t = foata_normalize(al, w);
    std::vector<Letter> flat;
    for (StepMask m : t.steps())
      for_each_letter(m, [&flat](Letter a) { flat.push_back(a); });
    if (!(foata_normalize(al, flat) == t)) fail("normal form is a fixpoint");
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!al->independent(w[i], w[i + 1])) continue;
      std::vector<Letter> sw = w;
      std::swap(sw[i], sw[i + 1]);
      if (!(foata_normalize(al, sw) == t)) fail("independent swaps preserve the normal form");
    }
  }
  out << "ok: foata normalization\n";

  for (int round = 0; round < 40; ++round) {
    AlphabetRef al = random_alpha(4);
    FoataWord u = foata_normalize(al, random_word(al, 5));
    FoataWord v = foata_normalize(al, random_word(al, 5));
    FoataWord c = concat(u, v);
    if (!prefix_le(u, c)) fail("left factor is a prefix of the concatenation");
    auto rest = left_divide(u, c);
    if (!rest || !(*rest == v)) fail("left division undoes concatenation");
  }
  out << "ok: concatenation and division\n";

  for (int round = 0; round < 15; ++round) {
    AlphabetRef al = random_alpha(3);
    std::vector<FoataWord> members;
    for (int k = 0; k < 3; ++k) members.push_back(foata_normalize(al, random_word(al, 4)));
    RecTraceLang lang = RecTraceLang::from_finite(al, members);
    for (const FoataWord& t : members) {
      if (!lang.contains(t)) fail("finite language contains its members");
      if (!lang.residual(t).contains(FoataWord(al)))
        fail("residual by a member accepts the empty trace");
    }
  }
  out << "ok: finite languages and residuals\n";

  for (int round = 0; round < 3; ++round) {
    AlphabetRef al = random_alpha(3);
    std::uniform_int_distribution<int> dr(1, 2);
    int nrules = dr(rng);
    std::vector<RtlRule> rules;
    for (int r = 0; r < nrules; ++r) {
      std::vector<FoataWord> lhs{foata_normalize(al, random_word(al, 1))};
      std::vector<FoataWord> rhs{foata_normalize(al, random_word(al, 2))};
      rules.push_back(make_rule("r" + std::to_string(r + 1), RecTraceLang::full(al),
                                RecTraceLang::from_finite(al, lhs),
                                RecTraceLang::from_finite(al, rhs)));
    }
    RtlSystem sys{al, std::move(rules), {}};
    AutomaticPresentation pres = compile(sys, budget);
    if (!(presentation_edges_bounded(pres, 3, budget) == brute_force_edges(sys, 3, budget)))
      fail("compiled relations match the direct edge definition");
  }
  out << "ok: compiled rewriting relations\n";

  {
    AlphabetRef al = make_alphabet({"a"});
    std::vector<RtlRule> rules;
    rules.push_back(make_rule("a", RecTraceLang::full(al),
                              RecTraceLang::from_finite(al, {FoataWord(al)}),
                              RecTraceLang::from_finite(al, {foata_normalize(al, "a")})));
    RtlSystem sys{al, std::move(rules), {}};
    AutomaticPresentation pres = compile(sys, budget);
    if (!decide(parse_formula("A x. E y. edge(a,x,y)"), pres, budget))
      fail("every chain vertex has a successor");
    if (decide(parse_formula("E x. edge(a,x,x)"), pres, budget))
      fail("the chain has no loop");
  }
  out << "ok: first-order checks on the chain\n";

  out << "selftest passed (seed " << seed << ")\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for trace rewriting with level-regular contexts"};
  app.name("tracta");
  app.require_subcommand(1);

  // Shared option storage; exactly one leaf subcommand runs per invocation.
  std::string input, word, u, v, trace, label, formula, query, root, target;
  std::vector<std::string> rec_paths;
  std::optional<std::string> out_path, dot_path;
  std::optional<std::size_t> state_budget;
  std::size_t bound = 6, vertex_budget = 1000, export_bound = 3;
  int explore_budget = 100, cut_n = 1, depth = 1;
  std::uint32_t seed = 1;
  bool json = false, stats = false, oracle = false, want_witness = false;

  auto add_state_budget = [&state_budget](CLI::App* cmd) {
    cmd->add_option("--state-budget", state_budget,
                    "cap on automaton states per construction (default: "
                    "TRACTA_STATE_BUDGET or 1000000)");
  };
  auto add_json = [&json](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine-readable JSON output");
  };

  CLI::App* foata = app.add_subcommand("foata", "Foata normal form of a word");
  foata->add_option("alphabet", input, "alphabet JSON file")->required();
  foata->add_option("word", word, "word over the alphabet")->required();
  add_json(foata);
  foata->callback([&] { cmd_foata(input, word, json, out); });

  CLI::App* eq = app.add_subcommand("eq", "decide trace equivalence of two words");
  eq->add_option("alphabet", input, "alphabet JSON file")->required();
  eq->add_option("u", u, "first word")->required();
  eq->add_option("v", v, "second word")->required();
  add_json(eq);
  eq->callback([&] { cmd_eq(input, u, v, json, out); });

  CLI::App* rtl = app.add_subcommand("rtl", "rewriting systems and their presentations");
  rtl->require_subcommand(1);

  CLI::App* rtlc = rtl->add_subcommand("compile", "compile a system to a presentation bundle");
  rtlc->add_option("system", input, "rewriting system JSON file")->required();
  rtlc->add_option("--out", out_path, "bundle directory (default: system path with .bundle)");
  rtlc->add_flag("--stats", stats, "print states built and elapsed time");
  add_json(rtlc);
  add_state_budget(rtlc);
  rtlc->callback([&] { cmd_rtl_compile(input, out_path, stats, json, state_budget, out); });

  CLI::App* rtle = rtl->add_subcommand("edges", "list rewrite edges up to a letter bound");
  rtle->add_option("system", input, "rewriting system JSON file")->required();
  rtle->add_option("--bound", bound, "maximum letters per endpoint")->required();
  rtle->add_flag("--oracle", oracle, "compare against the direct edge definition");
  add_json(rtle);
  add_state_budget(rtle);
  rtle->callback([&] { cmd_rtl_edges(input, bound, oracle, json, state_budget, out); });

  CLI::App* rtls = rtl->add_subcommand("successors", "regular set of one-step successors");
  rtls->add_option("bundle", input, "presentation bundle directory")->required();
  rtls->add_option("trace", trace, "source trace (word or {a,b}{c} form)")->required();
  rtls->add_option("label", label, "rule label")->required();
  add_json(rtls);
  add_state_budget(rtls);
  rtls->callback([&] { cmd_rtl_successors(input, trace, label, json, state_budget, out); });

  CLI::App* fo = app.add_subcommand("fo", "first-order model checking");
  fo->require_subcommand(1);

  CLI::App* foc = fo->add_subcommand("check", "decide a sentence over a presentation");
  foc->add_option("bundle", input, "presentation bundle directory")->required();
  foc->add_option("formula", formula, "formula file or literal formula text")->required();
  foc->add_flag("--witness", want_witness, "print a satisfying assignment when one exists");
  add_json(foc);
  add_state_budget(foc);
  foc->callback([&] { cmd_fo_check(input, formula, want_witness, json, state_budget, out); });

  CLI::App* unf = app.add_subcommand("unfold", "compile a concurrent automaton to a system");
  unf->add_option("automaton", input,
                  "automaton JSON file or bundled name (grid, grid-tree, residual:(ab)*)")
      ->required();
  unf->add_option("--rec", rec_paths, "recognizable language JSON file (repeatable)");
  unf->add_option("--out", out_path, "output file (default: stdout)");
  add_state_budget(unf);
  unf->callback([&] { cmd_unfold(input, rec_paths, out_path, state_budget, out); });

  CLI::App* es = app.add_subcommand("es", "event-structure queries over a language");
  es->add_option("language", input, "recognizable language JSON file")->required();
  es->add_option("--query", query, "query: 'le T1 T2' | 'conflict T1 T2' | 'label A T'")
      ->required();
  add_json(es);
  add_state_budget(es);
  es->callback([&] { cmd_es(input, query, json, state_budget, out); });

  CLI::App* gtrs = app.add_subcommand("gtrs", "ground-term rewriting workbench");
  gtrs->require_subcommand(1);

  CLI::App* gte = gtrs->add_subcommand("explore", "breadth-first rewrite graph fragment");
  gte->add_option("system", input, "ground-term system JSON file")->required();
  gte->add_option("--budget", explore_budget, "maximum terms to explore")->required();
  gte->add_option("--dot", dot_path, "also write the fragment as DOT");
  add_json(gte);
  gte->callback([&] { cmd_gtrs_explore(input, explore_budget, dot_path, json, out); });

  CLI::App* gtd = gtrs->add_subcommand("decompose", "components above a size cut");
  gtd->add_option("system", input, "ground-term system JSON file")->required();
  gtd->add_option("--n", cut_n, "size cut")->required();
  gtd->add_option("--budget", explore_budget, "maximum terms to explore")->required();
  add_json(gtd);
  gtd->callback([&] { cmd_gtrs_decompose(input, cut_n, explore_budget, json, out); });

  CLI::App* gtt = gtrs->add_subcommand("tree", "depth-bounded tree unfolding of a fragment");
  gtt->add_option("fragment", input, "graph fragment JSON file")->required();
  gtt->add_option("--root", root, "vertex to unfold from")->required();
  gtt->add_option("--depth", depth, "unfolding depth")->required();
  add_json(gtt);
  gtt->callback([&] { cmd_gtrs_tree(input, root, depth, json, out); });

  CLI::App* minsky = app.add_subcommand("minsky", "two-counter machines as systems");
  minsky->require_subcommand(1);

  CLI::App* mc = minsky->add_subcommand("compile", "counter machine to rewriting system");
  mc->add_option("machine", input, "machine text file")->required();
  mc->add_option("--out", out_path, "output file (default: stdout)");
  mc->callback([&] { cmd_minsky_compile(input, out_path, out); });

  CLI::App* mr = minsky->add_subcommand("run", "breadth-first halting search");
  mr->add_option("machine", input, "machine text file")->required();
  mr->add_option("--budget", vertex_budget, "maximum configurations to explore")->required();
  add_json(mr);
  add_state_budget(mr);
  mr->callback([&] { cmd_minsky_run(input, vertex_budget, json, state_budget, out); });

  CLI::App* exp = app.add_subcommand("export", "export artifacts to other formats");
  exp->require_subcommand(1);

  CLI::App* expd = exp->add_subcommand("dot", "render a bundle or fragment as DOT");
  expd->add_option("target", target, "bundle directory or fragment JSON file")->required();
  expd->add_option("--out", out_path, "output file (default: stdout)");
  expd->add_option("--bound", export_bound, "letter bound for bundle vertices (default 3)");
  add_state_budget(expd);
  expd->callback([&] { cmd_export_dot(target, out_path, export_bound, state_budget, out); });

  CLI::App* st = app.add_subcommand("selftest", "randomized consistency checks");
  st->add_option("--seed", seed, "random seed (default 1)");
  add_state_budget(st);
  st->callback([&] { cmd_selftest(seed, state_budget, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tracta
