#include "tracta/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace tracta {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string str_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) bad(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) bad(where, std::string("\"") + key + "\" must be an array");
  return v;
}

std::vector<std::string> string_list(const Json& j, const char* key,
                                     const std::string& where) {
  std::vector<std::string> out;
  for (const Json& e : array_field(j, key, where)) {
    if (!e.is_string())
      bad(where, std::string("\"") + key + "\" must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// -------- symbol domains --------

std::string domain_name(const Domain& d) {
  switch (d.kind()) {
    case Domain::Kind::Letters: return "letters";
    case Domain::Kind::Steps: return "steps";
    case Domain::Kind::StepsNonEmpty: return "steps-nonempty";
    case Domain::Kind::Tuple: break;
  }
  return "tuple(" + domain_name(d.base_domain()) + "," +
         std::to_string(d.arity()) + ")";
}

Domain domain_from_name(const AlphabetRef& alpha, const std::string& name,
                        const std::string& where) {
  if (name == "letters") return Domain::letters(alpha);
  if (name == "steps") return Domain::steps(alpha);
  if (name == "steps-nonempty") return Domain::steps_nonempty(alpha);
  if (name.rfind("tuple(", 0) == 0 && !name.empty() && name.back() == ')') {
    std::string inner = name.substr(6, name.size() - 7);
    std::size_t comma = inner.rfind(',');
    if (comma != std::string::npos) {
      std::string arity = trimmed(inner.substr(comma + 1));
      Domain base = domain_from_name(alpha, trimmed(inner.substr(0, comma)), where);
      if (base.kind() != Domain::Kind::Tuple && !arity.empty() &&
          std::all_of(arity.begin(), arity.end(),
                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
          arity.size() <= 2) {
        int k = std::stoi(arity);
        if (k >= 1 && k <= 16) return Domain::tuple(base.kind(), alpha, k);
      }
    }
  }
  bad(where, "unknown symbol domain \"" + name + "\"");
}

Json symbol_to_json(const Domain& d, Symbol s) {
  const AlphabetRef& alpha = d.alphabet();
  switch (d.kind()) {
    case Domain::Kind::Letters:
      return Json(alpha->name(static_cast<Letter>(s)));
    case Domain::Kind::Steps:
    case Domain::Kind::StepsNonEmpty: {
      Json arr = Json::array();
      for_each_letter(static_cast<StepMask>(s),
                      [&](Letter a) { arr.push_back(alpha->name(a)); });
      return arr;
    }
    case Domain::Kind::Tuple: break;
  }
  Json arr = Json::array();
  Domain base = d.base_domain();
  for (const std::optional<Symbol>& track : d.unpack(s))
    arr.push_back(track ? symbol_to_json(base, *track) : Json("#"));
  return arr;
}

Symbol symbol_from_json(const Domain& d, const Json& j, const std::string& where) {
  const AlphabetRef& alpha = d.alphabet();
  switch (d.kind()) {
    case Domain::Kind::Letters:
      if (!j.is_string()) bad(where, "a letter symbol must be a string");
      return alpha->letter(j.get<std::string>());
    case Domain::Kind::Steps:
    case Domain::Kind::StepsNonEmpty: {
      if (!j.is_array()) bad(where, "a step symbol must be an array of letters");
      StepMask m = 0;
      for (const Json& e : j) {
        if (!e.is_string()) bad(where, "a step symbol must be an array of letters");
        Letter a = alpha->letter(e.get<std::string>());
        if (m & bit(a)) bad(where, "letter repeated in step: " + alpha->name(a));
        m = static_cast<StepMask>(m | bit(a));
      }
      if (!alpha->valid_step(m))
        bad(where, "dependent letters in one step: " + alpha->render_step(m));
      if (m == 0 && d.kind() == Domain::Kind::StepsNonEmpty)
        bad(where, "the empty step is not a symbol of this domain");
      return m;
    }
    case Domain::Kind::Tuple: break;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != d.arity())
    bad(where, "a tuple symbol must be an array of " + std::to_string(d.arity()) +
                   " entries");
  Domain base = d.base_domain();
  std::vector<std::optional<Symbol>> tracks;
  bool padded_only = true;
  for (const Json& e : j) {
    if (e.is_string() && e.get<std::string>() == "#") {
      tracks.emplace_back(std::nullopt);
    } else {
      tracks.emplace_back(symbol_from_json(base, e, where));
      padded_only = false;
    }
  }
  if (padded_only) bad(where, "the all-pad tuple symbol is not allowed");
  return d.pack(tracks);
}

std::string qname(State s) { return "q" + std::to_string(s); }

// Shared state-list parsing for automaton-shaped objects.
struct StateIndex {
  std::vector<std::string> names;
  std::map<std::string, State> index;

  State of(const Json& e, const char* what, const std::string& where) const {
    if (!e.is_string()) bad(where, std::string(what) + " must be a state name");
    auto it = index.find(e.get<std::string>());
    if (it == index.end())
      bad(where, "unknown state \"" + e.get<std::string>() + "\" in " + what);
    return it->second;
  }
};

StateIndex parse_states(const Json& j, const std::string& where) {
  StateIndex si;
  for (const std::string& n : string_list(j, "states", where)) {
    if (n.empty()) bad(where, "empty state name");
    if (!si.index.emplace(n, static_cast<State>(si.names.size())).second)
      bad(where, "duplicate state \"" + n + "\"");
    si.names.push_back(n);
  }
  if (si.names.empty()) bad(where, "\"states\" must not be empty");
  return si;
}

std::string label_filename(const std::string& label, std::set<std::string>& used) {
  std::string base;
  if (label == "*") {
    base = "star";
  } else {
    for (char c : label)
      base += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
    if (base.empty()) base = "label";
  }
  std::string fname = "rel_" + base + ".json";
  for (int k = 2; !used.insert(fname).second; ++k)
    fname = "rel_" + base + "_" + std::to_string(k) + ".json";
  return fname;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

// -------- json plumbing --------

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& p) {
  if (fs::is_directory(p))
    throw ParseError(p.string() + " is a directory, expected a file");
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read " + p.string());
  return os.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot write " + p.string());
  out << text;
  out.flush();
  if (!out) throw ResourceError("cannot write " + p.string());
}

// -------- alphabets --------

Json alphabet_to_json(const AlphabetRef& a) {
  Json j;
  j["letters"] = a->letters();
  Json pairs = Json::array();
  for (const auto& [x, y] : a->independent_pairs())
    pairs.push_back(Json::array({a->name(x), a->name(y)}));
  j["independent"] = pairs;
  return j;
}

AlphabetRef alphabet_from_json(const Json& j) {
  const std::string where = "alphabet";
  std::vector<std::string> letters = string_list(j, "letters", where);
  std::vector<std::pair<std::string, std::string>> indep;
  if (j.is_object() && j.contains("independent")) {
    for (const Json& e : array_field(j, "independent", where)) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        bad(where, "\"independent\" must list two-letter pairs");
      indep.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return make_alphabet(std::move(letters), indep);
}

// -------- automata --------

Json dfa_to_json(const Dfa& d) {
  Json j;
  j["domain"] = domain_name(d.domain);
  Json states = Json::array();
  for (std::size_t s = 0; s < d.delta.size(); ++s) states.push_back(qname(static_cast<State>(s)));
  j["states"] = states;
  j["initial"] = qname(d.initial);
  Json finals = Json::array();
  for (std::size_t s = 0; s < d.finals.size(); ++s)
    if (d.finals[s]) finals.push_back(qname(static_cast<State>(s)));
  j["finals"] = finals;
  Json trans = Json::array();
  for (std::size_t s = 0; s < d.delta.size(); ++s)
    for (const auto& [x, t] : d.delta[s])
      trans.push_back(Json::array(
          {qname(static_cast<State>(s)), symbol_to_json(d.domain, x), qname(t)}));
  j["transitions"] = trans;
  return j;
}

Dfa dfa_from_json(const AlphabetRef& alpha, const Json& j, const Budget& budget) {
  const std::string where = "automaton";
  Domain dom = domain_from_name(alpha, str_field(j, "domain", where), where);
  StateIndex si = parse_states(j, where);
  State initial = si.of(field(j, "initial", where), "\"initial\"", where);
  std::vector<char> fin(si.names.size(), 0);
  for (const Json& e : array_field(j, "finals", where))
    fin[si.of(e, "\"finals\"", where)] = 1;

  std::vector<std::tuple<State, Symbol, State>> arcs;
  std::set<std::pair<State, Symbol>> seen;
  bool deterministic = true;
  for (const Json& e : array_field(j, "transitions", where)) {
    if (!e.is_array() || e.size() != 3)
      bad(where, "each transition must be [src, symbol, dst]");
    State s = si.of(e[0], "a transition", where);
    Symbol x = symbol_from_json(dom, e[1], where);
    State t = si.of(e[2], "a transition", where);
    if (!seen.emplace(s, x).second) deterministic = false;
    arcs.emplace_back(s, x, t);
  }
  if (deterministic) {
    Dfa d(dom);
    for (char f : fin) d.add_state(f != 0);
    d.initial = initial;
    for (const auto& [s, x, t] : arcs) d.add_arc(s, x, t);
    return d;
  }
  Nfa n(dom);
  for (char f : fin) n.add_state(f != 0);
  n.initials.push_back(initial);
  for (const auto& [s, x, t] : arcs) n.add_arc(s, x, t);
  return determinize(n, budget);
}

// -------- trace languages --------

Json rec_lang_to_spec(const RecTraceLang& lang) {
  Json j;
  j["kind"] = "recognizable";
  j["automaton"] = dfa_to_json(lang.word_dfa());
  return j;
}

RecTraceLang rec_lang_from_spec(const AlphabetRef& alpha, const Json& j,
                                const Budget& budget) {
  const std::string where = "language";
  std::string kind = str_field(j, "kind", where);
  if (kind == "recognizable") {
    Dfa d = dfa_from_json(alpha, field(j, "automaton", where), budget);
    if (d.domain.kind() != Domain::Kind::Letters)
      bad(where, "a recognizable language needs a word automaton over letters");
    return RecTraceLang::from_dfa(alpha, d, budget);
  }
  if (kind == "finite") {
    std::vector<FoataWord> traces;
    for (const std::string& t : string_list(j, "traces", where))
      traces.push_back(parse_trace(alpha, t));
    return RecTraceLang::from_finite(alpha, traces);
  }
  if (kind == "level-regular")
    bad(where, "this position needs a trace-closed word language; "
               "\"level-regular\" only describes sets of normal forms");
  bad(where, "unknown language kind \"" + kind + "\"");
}

Json level_lang_to_spec(const LevelRegLang& lang) {
  Json j;
  j["kind"] = "level-regular";
  j["automaton"] = dfa_to_json(lang.step_dfa());
  return j;
}

LevelRegLang level_lang_from_spec(const AlphabetRef& alpha, const Json& j,
                                  const Budget& budget) {
  const std::string where = "language";
  std::string kind = str_field(j, "kind", where);
  if (kind == "level-regular") {
    Dfa d = dfa_from_json(alpha, field(j, "automaton", where), budget);
    if (d.domain.kind() != Domain::Kind::StepsNonEmpty)
      bad(where, "a level-regular language needs an automaton over nonempty steps");
    return LevelRegLang::from_step_dfa(alpha, d, budget);
  }
  if (kind == "finite") {
    std::vector<FoataWord> traces;
    for (const std::string& t : string_list(j, "traces", where))
      traces.push_back(parse_trace(alpha, t));
    return LevelRegLang::from_finite(alpha, traces);
  }
  if (kind == "recognizable")
    return foata_encoding(rec_lang_from_spec(alpha, j, budget), budget);
  bad(where, "unknown language kind \"" + kind + "\"");
}

Json rec_lang_to_json(const RecTraceLang& lang) {
  Json j;
  j["alphabet"] = alphabet_to_json(lang.alphabet());
  Json spec = rec_lang_to_spec(lang);
  j["kind"] = spec["kind"];
  j["automaton"] = spec["automaton"];
  return j;
}

RecTraceLang rec_lang_from_json(const Json& j, const Budget& budget) {
  AlphabetRef alpha = alphabet_from_json(field(j, "alphabet", "language"));
  return rec_lang_from_spec(alpha, j, budget);
}

// -------- rewriting systems --------

Json rtl_to_json(const RtlSystem& sys) {
  Json j;
  j["alphabet"] = alphabet_to_json(sys.alpha);
  j["labels"] = sys.labels();
  Json rules = Json::array();
  for (const RtlRule& r : sys.rules) {
    Json jr;
    jr["label"] = r.label;
    jr["context"] = level_lang_to_spec(r.context);
    jr["lhs"] = rec_lang_to_spec(r.lhs);
    jr["rhs"] = rec_lang_to_spec(r.rhs);
    rules.push_back(std::move(jr));
  }
  j["rules"] = rules;
  return j;
}

RtlSystem rtl_from_json(const Json& j, const Budget& budget) {
  const std::string where = "rewriting system";
  AlphabetRef alpha = alphabet_from_json(field(j, "alphabet", where));
  RtlSystem sys;
  sys.alpha = alpha;
  std::set<std::string> rule_labels;
  for (const Json& e : array_field(j, "rules", where)) {
    std::string label = str_field(e, "label", "rule");
    const std::string at = "rule \"" + label + "\"";
    LevelRegLang ctx = level_lang_from_spec(alpha, field(e, "context", at), budget);
    RecTraceLang lhs = rec_lang_from_spec(alpha, field(e, "lhs", at), budget);
    RecTraceLang rhs = rec_lang_from_spec(alpha, field(e, "rhs", at), budget);
    sys.rules.push_back(make_rule(label, std::move(ctx), std::move(lhs), std::move(rhs)));
    rule_labels.insert(sys.rules.back().label);
  }
  if (j.is_object() && j.contains("labels")) {
    std::set<std::string> extra;
    for (const std::string& l : string_list(j, "labels", where))
      if (!rule_labels.count(l) && extra.insert(l).second)
        sys.extra_labels.push_back(l);
  }
  return sys;
}

// -------- concurrent automata --------

Json concurrent_to_json(const ConcurrentAutomaton& a) {
  Json j;
  j["alphabet"] = alphabet_to_json(a.alpha);
  Json states = Json::array();
  for (std::size_t s = 0; s < a.num_states; ++s) states.push_back(qname(static_cast<State>(s)));
  j["states"] = states;
  j["initial"] = qname(a.initial);
  Json finals = Json::array();
  for (State s : a.finals) finals.push_back(qname(s));
  j["finals"] = finals;
  Json trans = Json::array();
  for (const auto& [p, x, q] : a.arcs)
    trans.push_back(Json::array({qname(p), a.alpha->name(x), qname(q)}));
  j["transitions"] = trans;
  return j;
}

ConcurrentAutomaton concurrent_from_json(const Json& j) {
  const std::string where = "concurrent automaton";
  ConcurrentAutomaton a;
  a.alpha = alphabet_from_json(field(j, "alphabet", where));
  StateIndex si = parse_states(j, where);
  a.num_states = si.names.size();
  a.initial = si.of(field(j, "initial", where), "\"initial\"", where);
  for (const Json& e : array_field(j, "finals", where))
    a.finals.push_back(si.of(e, "\"finals\"", where));
  for (const Json& e : array_field(j, "transitions", where)) {
    if (!e.is_array() || e.size() != 3 || !e[1].is_string())
      bad(where, "each transition must be [src, letter, dst]");
    a.arcs.emplace_back(si.of(e[0], "a transition", where),
                        a.alpha->letter(e[1].get<std::string>()),
                        si.of(e[2], "a transition", where));
  }
  std::vector<std::string> problems = validate(a);
  if (!problems.empty()) {
    std::string msg = where + ":";
    for (const std::string& p : problems) msg += " " + p + ";";
    msg.pop_back();
    throw InvariantError(msg);
  }
  return a;
}

// -------- ground-term systems --------

Json gtrs_to_json(const Gtrs& g) {
  Json j;
  Json ranked = Json::object();
  for (int i = 0; i < static_cast<int>(g.ranked->size()); ++i)
    ranked[g.ranked->name(i)] = g.ranked->arity(i);
  j["ranked"] = ranked;
  j["labels"] = g.labels;
  j["initial"] = g.initial.render();
  Json rules = Json::array();
  for (const GtrsRule& r : g.rules) {
    Json jr;
    jr["label"] = r.label;
    jr["lhs"] = r.lhs.render();
    jr["rhs"] = r.rhs.render();
    rules.push_back(std::move(jr));
  }
  j["rules"] = rules;
  return j;
}

Gtrs gtrs_from_json(const Json& j) {
  const std::string where = "term rewriting system";
  const Json& jr = field(j, "ranked", where);
  if (!jr.is_object() || jr.empty())
    bad(where, "\"ranked\" must be a nonempty object of symbol arities");
  std::vector<std::pair<std::string, int>> symbols;
  for (auto it = jr.begin(); it != jr.end(); ++it) {
    if (!it.value().is_number_integer())
      bad(where, "arity of \"" + it.key() + "\" must be an integer");
    std::int64_t arity = it.value().get<std::int64_t>();
    if (arity < 0 || arity > 255)
      bad(where, "arity of \"" + it.key() + "\" is out of range");
    symbols.emplace_back(it.key(), static_cast<int>(arity));
  }
  RankedAlphabetRef ranked = make_ranked_alphabet(std::move(symbols));
  std::vector<std::string> labels = string_list(j, "labels", where);
  std::vector<GtrsRule> rules;
  for (const Json& e : array_field(j, "rules", where)) {
    std::string label = str_field(e, "label", "rule");
    const std::string at = "rule \"" + label + "\"";
    rules.push_back(GtrsRule{std::move(label),
                             parse_term(ranked, str_field(e, "lhs", at)),
                             parse_term(ranked, str_field(e, "rhs", at))});
  }
  GroundTerm initial = parse_term(ranked, str_field(j, "initial", where));
  return make_gtrs(std::move(ranked), std::move(labels), std::move(rules),
                   std::move(initial));
}

// -------- fragments --------

Json fragment_to_json(const TermGraphFragment& f) {
  Json j;
  j["vertices"] = f.vertices;
  Json edges = Json::array();
  for (const FragmentEdge& e : f.edges)
    edges.push_back(Json::array({f.vertices[e.src], e.label, f.vertices[e.dst]}));
  j["edges"] = edges;
  j["truncated"] = f.truncated;
  return j;
}

TermGraphFragment fragment_from_json(const Json& j) {
  const std::string where = "fragment";
  TermGraphFragment f;
  std::map<std::string, int> index;
  for (const std::string& n : string_list(j, "vertices", where)) {
    if (n.empty()) bad(where, "empty vertex name");
    if (!index.emplace(n, static_cast<int>(f.vertices.size())).second)
      bad(where, "duplicate vertex \"" + n + "\"");
    f.vertices.push_back(n);
  }
  std::set<FragmentEdge> edges;
  for (const Json& e : array_field(j, "edges", where)) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      bad(where, "each edge must be [src, label, dst]");
    auto s = index.find(e[0].get<std::string>());
    auto t = index.find(e[2].get<std::string>());
    if (s == index.end() || t == index.end())
      bad(where, "edge endpoint is not a listed vertex");
    edges.insert(FragmentEdge{s->second, e[1].get<std::string>(), t->second});
  }
  f.edges.assign(edges.begin(), edges.end());
  if (j.is_object() && j.contains("truncated")) {
    const Json& tr = j["truncated"];
    if (!tr.is_boolean()) bad(where, "\"truncated\" must be a boolean");
    f.truncated = tr.get<bool>();
  }
  return f;
}

TermGraphFragment named_fragment(const GraphFragment& f) {
  TermGraphFragment out;
  for (const FoataWord& v : f.vertices) out.vertices.push_back(v.render());
  std::set<FragmentEdge> edges;
  for (const auto& [s, label, t] : f.edges)
    edges.insert(FragmentEdge{static_cast<int>(s), label, static_cast<int>(t)});
  out.edges.assign(edges.begin(), edges.end());
  out.truncated = f.truncated;
  return out;
}

std::string fragment_to_dot(const TermGraphFragment& f,
                            const std::vector<int>& frontier) {
  std::set<int> ring(frontier.begin(), frontier.end());
  std::ostringstream os;
  os << "digraph fragment {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << dot_escape(f.vertices[i]) << "\"";
    if (ring.count(static_cast<int>(i))) os << ", peripheries=2";
    os << "];\n";
  }
  for (const FragmentEdge& e : f.edges)
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << dot_escape(e.label)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

// -------- presentation bundles --------

void write_bundle(const AutomaticPresentation& pres, const std::filesystem::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw ResourceError("cannot create directory " + dir.string() + ": " + ec.message());
  Json manifest;
  manifest["kind"] = "presentation";
  manifest["alphabet"] = alphabet_to_json(pres.alpha);
  manifest["vertices"] = "vertices.json";
  write_text_file(dir / "vertices.json", dump_json(dfa_to_json(pres.vertices.step_dfa())));
  Json rels = Json::object();
  std::set<std::string> used;
  for (const auto& [label, rel] : pres.relations) {
    std::string fname = label_filename(label, used);
    rels[label] = fname;
    write_text_file(dir / fname, dump_json(dfa_to_json(rel.pair_dfa())));
  }
  manifest["relations"] = rels;
  write_text_file(dir / "manifest.json", dump_json(manifest));
}

AutomaticPresentation read_bundle(const std::filesystem::path& dir,
                                  const Budget& budget) {
  const std::string where = "manifest";
  Json manifest = parse_json(read_text_file(dir / "manifest.json"),
                             (dir / "manifest.json").string());
  if (str_field(manifest, "kind", where) != "presentation")
    bad(where, "\"kind\" must be \"presentation\"");
  AlphabetRef alpha = alphabet_from_json(field(manifest, "alphabet", where));

  std::string vfile = str_field(manifest, "vertices", where);
  Dfa vdfa = dfa_from_json(alpha, parse_json(read_text_file(dir / vfile), vfile), budget);
  if (vdfa.domain.kind() != Domain::Kind::StepsNonEmpty)
    bad(vfile, "the vertex automaton must range over nonempty steps");
  LevelRegLang vertices = LevelRegLang::from_step_dfa(alpha, vdfa, budget);

  const Json& jrels = field(manifest, "relations", where);
  if (!jrels.is_object()) bad(where, "\"relations\" must be an object");
  std::map<std::string, SyncRelation> relations;
  for (auto it = jrels.begin(); it != jrels.end(); ++it) {
    if (!it.value().is_string())
      bad(where, "relation entry \"" + it.key() + "\" must name a file");
    std::string fname = it.value().get<std::string>();
    Dfa pd = dfa_from_json(alpha, parse_json(read_text_file(dir / fname), fname), budget);
    if (pd.domain.kind() != Domain::Kind::Tuple ||
        pd.domain.base() != Domain::Kind::StepsNonEmpty || pd.domain.arity() != 2)
      bad(fname, "a relation automaton must range over tuple(steps-nonempty,2)");
    relations.emplace(it.key(), SyncRelation::from_dfa(pd, budget));
  }
  return AutomaticPresentation{std::move(alpha), std::move(vertices),
                               std::move(relations)};
}

// -------- traces --------

FoataWord parse_trace(const AlphabetRef& alpha, const std::string& text) {
  std::string s = trimmed(text);
  if (s.empty() || s == "ε") return FoataWord(alpha);
  if (s[0] != '{') return foata_normalize(alpha, s);

  std::vector<StepMask> steps;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '{')
      throw ParseError("bad normal form \"" + text + "\": expected '{' at offset " +
                       std::to_string(i));
    std::size_t close = s.find('}', i);
    if (close == std::string::npos)
      throw ParseError("bad normal form \"" + text + "\": unclosed step");
    StepMask m = 0;
    std::size_t at = i + 1;
    while (at < close) {
      std::size_t comma = s.find(',', at);
      if (comma == std::string::npos || comma > close) comma = close;
      std::string tok = trimmed(s.substr(at, comma - at));
      if (tok.empty())
        throw ParseError("bad normal form \"" + text + "\": empty letter name");
      Letter a = alpha->letter(tok);
      if (m & bit(a))
        throw ParseError("bad normal form \"" + text + "\": letter repeated in step");
      m = static_cast<StepMask>(m | bit(a));
      at = comma + 1;
    }
    steps.push_back(m);
    i = close + 1;
    while (i < s.size() && s[i] == ' ') ++i;
  }
  return FoataWord(alpha, std::move(steps));
}

}  // namespace tracta
