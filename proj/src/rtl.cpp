#include "tracta/rtl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace tracta {

namespace {

void check_alpha(const AlphabetRef& a, const AlphabetRef& b, const char* what) {
  if (!same_alphabet(a, b))
    throw InvariantError(std::string(what) + " over mismatched alphabets");
}

}  // namespace

RtlRule make_rule(std::string label, LevelRegLang context, RecTraceLang lhs,
                  RecTraceLang rhs) {
  check_alpha(context.alphabet(), lhs.alphabet(), "rule");
  check_alpha(context.alphabet(), rhs.alphabet(), "rule");
  return RtlRule{std::move(label), std::move(context), std::move(lhs), std::move(rhs)};
}

RtlRule make_rule(std::string label, const RecTraceLang& context, RecTraceLang lhs,
                  RecTraceLang rhs) {
  return make_rule(std::move(label), foata_encoding(context), std::move(lhs),
                   std::move(rhs));
}

std::vector<std::string> RtlSystem::labels() const {
  std::set<std::string> all(extra_labels.begin(), extra_labels.end());
  for (const RtlRule& r : rules) all.insert(r.label);
  return {all.begin(), all.end()};
}

namespace {

// Track states of the product: phase 1 runs all three automata plus the two
// insertion accumulators; phase 2 keeps only the output tracks, kDone once a
// track has padded out (pad entry requires a final state, so kDone is
// unconditionally accepting).
constexpr State kDone = ~State{0};

struct Phase1Key {
  State p, qv, qw;
  StepMask sb, sc;
  bool operator<(const Phase1Key& o) const {
    return std::tie(p, qv, qw, sb, sc) < std::tie(o.p, o.qv, o.qw, o.sb, o.sc);
  }
};

struct Phase2Key {
  State v, w;
  bool operator<(const Phase2Key& o) const {
    return std::tie(v, w) < std::tie(o.v, o.w);
  }
};

}  // namespace

SyncRelation merge_relation(const LevelRegLang& ctx, const RecTraceLang& lhs,
                            const RecTraceLang& rhs, const Budget& budget) {
  check_alpha(ctx.alphabet(), lhs.alphabet(), "merge");
  check_alpha(ctx.alphabet(), rhs.alphabet(), "merge");
  const AlphabetRef& al = ctx.alphabet();
  const Dfa& cd = ctx.step_dfa();
  const Dfa satv = step_saturate(lhs, budget);
  const Dfa satw = step_saturate(rhs, budget);
  const std::vector<StepMask> steps = al->steps();

  Nfa nfa(tuple_domain(Domain::steps_nonempty(al), 2));
  const Domain& pd = nfa.domain;
  std::map<Phase1Key, State> id1;
  std::map<Phase2Key, State> id2;
  std::deque<Phase1Key> todo1;
  std::deque<Phase2Key> todo2;

  auto intern1 = [&](const Phase1Key& k) {
    auto it = id1.find(k);
    if (it != id1.end()) return it->second;
    budget.charge(1, "merge relation");
    bool fin = cd.is_final(k.p) && satv.is_final(k.qv) && satw.is_final(k.qw);
    State s = nfa.add_state(fin);
    id1.emplace(k, s);
    todo1.push_back(k);
    return s;
  };
  auto intern2 = [&](const Phase2Key& k) {
    auto it = id2.find(k);
    if (it != id2.end()) return it->second;
    budget.charge(1, "merge relation");
    bool fin = (k.v == kDone || satv.is_final(k.v)) &&
               (k.w == kDone || satw.is_final(k.w));
    State s = nfa.add_state(fin);
    id2.emplace(k, s);
    todo2.push_back(k);
    return s;
  };

  nfa.initials.push_back(intern1({cd.initial, satv.initial, satw.initial, 0, 0}));

  while (!todo1.empty() || !todo2.empty()) {
    if (!todo1.empty()) {
      Phase1Key k = todo1.front();
      todo1.pop_front();
      State s = id1.at(k);
      for (const auto& [asym, p2] : cd.delta[k.p]) {
        StepMask a = static_cast<StepMask>(asym);
        // Letters already inserted must commute past this and all later
        // context steps; checking each step as it is consumed covers both.
        if ((al->dependents_of(a) & k.sb) || (al->dependents_of(a) & k.sc)) continue;
        for (StepMask sl : steps) {
          if ((sl & a) != a) continue;
          StepMask eb = static_cast<StepMask>(sl & ~a);
          auto qv2 = satv.step(k.qv, eb);
          if (!qv2) continue;
          for (StepMask sr : steps) {
            if ((sr & a) != a) continue;
            StepMask ec = static_cast<StepMask>(sr & ~a);
            auto qw2 = satw.step(k.qw, ec);
            if (!qw2) continue;
            State dst = intern1({p2, *qv2, *qw2, static_cast<StepMask>(k.sb | eb),
                                 static_cast<StepMask>(k.sc | ec)});
            nfa.add_arc(s, pd.pack({Symbol{sl}, Symbol{sr}}), dst);
          }
        }
      }
      if (cd.is_final(k.p)) nfa.add_arc(s, kEps, intern2({k.qv, k.qw}));
      continue;
    }
    Phase2Key k = todo2.front();
    todo2.pop_front();
    State s = id2.at(k);
    if (k.v != kDone && k.w != kDone) {
      for (const auto& [bsym, v2] : satv.delta[k.v]) {
        if (bsym == 0) continue;
        for (const auto& [csym, w2] : satw.delta[k.w]) {
          if (csym == 0) continue;
          nfa.add_arc(s, pd.pack({bsym, csym}), intern2({v2, w2}));
        }
        if (satw.is_final(k.w))
          nfa.add_arc(s, pd.pack({bsym, std::nullopt}), intern2({v2, kDone}));
      }
      if (satv.is_final(k.v))
        for (const auto& [csym, w2] : satw.delta[k.w]) {
          if (csym == 0) continue;
          nfa.add_arc(s, pd.pack({std::nullopt, csym}), intern2({kDone, w2}));
        }
    } else if (k.v == kDone) {
      for (const auto& [csym, w2] : satw.delta[k.w]) {
        if (csym == 0) continue;
        nfa.add_arc(s, pd.pack({std::nullopt, csym}), intern2({kDone, w2}));
      }
    } else {
      for (const auto& [bsym, v2] : satv.delta[k.v]) {
        if (bsym == 0) continue;
        nfa.add_arc(s, pd.pack({bsym, std::nullopt}), intern2({v2, kDone}));
      }
    }
  }

  Dfa det = determinize(nfa, budget);
  Dfa valid = all_pairs(LevelRegLang::full(al).step_dfa(), budget).pair_dfa();
  return SyncRelation::from_dfa(minimize(intersect(det, valid, budget), budget),
                                budget);
}

AutomaticPresentation compile(const RtlSystem& sys, const Budget& budget) {
  std::map<std::string, SyncRelation> rels;
  for (const RtlRule& r : sys.rules) {
    check_alpha(sys.alpha, r.context.alphabet(), "system");
    SyncRelation m = merge_relation(r.context, r.lhs, r.rhs, budget);
    auto it = rels.find(r.label);
    if (it == rels.end())
      rels.emplace(r.label, std::move(m));
    else
      it->second = union_rel(it->second, m, budget);
  }
  for (const std::string& l : sys.extra_labels)
    if (!rels.count(l))
      rels.emplace(l, SyncRelation::from_dfa(
                          empty_dfa(tuple_domain(Domain::steps_nonempty(sys.alpha), 2)),
                          budget));
  return AutomaticPresentation{sys.alpha, LevelRegLang::full(sys.alpha),
                               std::move(rels)};
}

LevelRegLang successors(const AutomaticPresentation& pres, const FoataWord& t,
                        const std::string& label, const Budget& budget) {
  check_alpha(pres.alpha, t.alphabet(), "successors");
  auto it = pres.relations.find(label);
  if (it == pres.relations.end()) return LevelRegLang::empty(pres.alpha);
  return LevelRegLang::from_step_dfa(pres.alpha, image(it->second, step_word(t), budget),
                                     budget);
}

GraphFragment bounded_bfs(const AutomaticPresentation& pres, const FoataWord& start,
                          std::size_t vertex_budget, std::size_t max_letters,
                          const std::vector<std::string>& labels, const Budget& budget) {
  check_alpha(pres.alpha, start.alphabet(), "bounded_bfs");
  GraphFragment frag;
  if (vertex_budget == 0) {
    frag.truncated = true;
    return frag;
  }
  std::vector<std::string> labs = labels;
  if (labs.empty())
    for (const auto& kv : pres.relations) labs.push_back(kv.first);
  else
    std::sort(labs.begin(), labs.end());

  std::map<FoataWord, std::size_t> index;
  std::deque<std::size_t> queue;
  auto intern = [&](const FoataWord& t) -> std::ptrdiff_t {
    auto it = index.find(t);
    if (it != index.end()) return static_cast<std::ptrdiff_t>(it->second);
    if (frag.vertices.size() >= vertex_budget) {
      frag.truncated = true;
      return -1;
    }
    std::size_t id = frag.vertices.size();
    frag.vertices.push_back(t);
    index.emplace(t, id);
    queue.push_back(id);
    return static_cast<std::ptrdiff_t>(id);
  };
  intern(start);

  // The cap guards each single successor-set construction; the counter is
  // reset per query so a long walk is not billed as one construction.
  Budget per_query(budget.cap());
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    FoataWord t = frag.vertices[i];
    for (const std::string& lab : labs) {
      per_query.reset();
      LevelRegLang succ = successors(pres, t, lab, per_query);
      if (succ.is_empty_lang()) continue;
      bool tr = false;
      std::vector<FoataWord> members = succ.enumerate(max_letters, vertex_budget + 1, &tr);
      if (tr) frag.truncated = true;
      for (const FoataWord& v : members) {
        if (v.letter_count() > max_letters) continue;
        std::ptrdiff_t j = intern(v);
        if (j < 0) continue;
        frag.edges.emplace_back(i, lab, static_cast<std::size_t>(j));
      }
    }
  }
  return frag;
}

std::vector<FoataWord> enumerate_traces(const AlphabetRef& alpha,
                                        std::size_t max_letters) {
  std::vector<FoataWord> out;
  out.emplace_back(alpha);
  std::vector<FoataWord> layer = {FoataWord(alpha)};
  const Letter nletters = static_cast<Letter>(alpha->size());
  for (std::size_t len = 1; len <= max_letters; ++len) {
    std::set<FoataWord> next;
    for (const FoataWord& t : layer)
      for (Letter a = 0; a < nletters; ++a)
        next.insert(concat(t, FoataWord(alpha, {bit(a)})));
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<GraphEdge> brute_force_edges(const RtlSystem& sys, std::size_t max_letters,
                                         const Budget& budget) {
  if (max_letters > Limits::defaults().max_letters)
    throw ResourceError("letter bound " + std::to_string(max_letters) +
                        " exceeds the configured maximum of " +
                        std::to_string(Limits::defaults().max_letters));
  const std::vector<FoataWord> traces = enumerate_traces(sys.alpha, max_letters);
  budget.charge(traces.size(), "brute-force edge oracle");

  // Right-hand candidates per rule, grouped ascending by letter count.
  std::vector<std::vector<FoataWord>> rhs_small(sys.rules.size());
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    for (const FoataWord& t : traces)
      if (sys.rules[i].rhs.contains(t)) rhs_small[i].push_back(t);

  std::set<GraphEdge> edges;
  std::vector<std::pair<FoataWord, FoataWord>> stack;
  for (const FoataWord& s : traces) {
    // Every factorization s = u·v, by growing u one minimal letter of v at
    // a time; distinct letter orders may reach the same u, hence the seen set.
    std::set<FoataWord> seen;
    stack.clear();
    stack.emplace_back(FoataWord(sys.alpha), s);
    seen.insert(stack.back().first);
    while (!stack.empty()) {
      auto [u, v] = std::move(stack.back());
      stack.pop_back();
      for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        const RtlRule& r = sys.rules[i];
        if (!r.lhs.contains(v) || !r.context.contains(u)) continue;
        for (const FoataWord& w : rhs_small[i]) {
          if (u.letter_count() + w.letter_count() > max_letters) break;
          edges.insert({s, r.label, concat(u, w)});
        }
      }
      if (!v.empty()) {
        StepMask first = v.steps()[0];
        for (Letter a = 0; a < static_cast<Letter>(sys.alpha->size()); ++a) {
          if (!(first & bit(a))) continue;
          FoataWord one(sys.alpha, {bit(a)});
          FoataWord u2 = concat(u, one);
          if (!seen.insert(u2).second) continue;
          stack.emplace_back(std::move(u2), *left_divide(one, v));
        }
      }
    }
  }
  return {edges.begin(), edges.end()};
}

std::vector<GraphEdge> presentation_edges_bounded(const AutomaticPresentation& pres,
                                                  std::size_t max_letters,
                                                  const Budget& budget) {
  std::set<GraphEdge> edges;
  for (const auto& [label, rel] : pres.relations) {
    const Dfa& d = rel.pair_dfa();
    if (d.delta.empty() || is_empty(d)) continue;
    std::size_t n = d.num_states();

    // Cheapest completion per track, for pruning bounded enumeration.
    auto track_weight = [&](Symbol col, int track) -> std::size_t {
      auto parts = d.domain.unpack(col);
      return parts[track] ? popcount(static_cast<StepMask>(*parts[track])) : 0;
    };
    auto min_to_accept = [&](int track) {
      std::vector<std::size_t> dist(n, SIZE_MAX);
      for (State s = 0; s < n; ++s)
        if (d.finals[s]) dist[s] = 0;
      // Bellman relaxation; the automaton is small and weights are ≥ 0.
      bool changed = true;
      while (changed) {
        changed = false;
        for (State s = 0; s < n; ++s)
          for (const auto& [x, t] : d.delta[s]) {
            if (dist[t] == SIZE_MAX) continue;
            std::size_t cand = dist[t] + track_weight(x, track);
            if (cand < dist[s]) {
              dist[s] = cand;
              changed = true;
            }
          }
      }
      return dist;
    };
    const std::vector<std::size_t> need_l = min_to_accept(0);
    const std::vector<std::size_t> need_r = min_to_accept(1);

    std::size_t explored = 0;
    Word cols;
    auto emit = [&]() {
      std::vector<Word> tracks = deconvolve(d.domain, cols);
      edges.insert({from_step_word(pres.alpha, tracks[0]), label,
                    from_step_word(pres.alpha, tracks[1])});
    };
    auto dfs = [&](auto&& self, State q, std::size_t cl, std::size_t cr) -> void {
      if ((++explored & 1023) == 0) budget.charge(1024, "bounded edge extraction");
      if (need_l[q] == SIZE_MAX) return;
      if (cl + need_l[q] > max_letters || cr + need_r[q] > max_letters) return;
      if (d.is_final(q)) emit();
      for (const auto& [x, t] : d.delta[q]) {
        std::size_t nl = cl + track_weight(x, 0);
        std::size_t nr = cr + track_weight(x, 1);
        if (nl > max_letters || nr > max_letters) continue;
        cols.push_back(x);
        self(self, t, nl, nr);
        cols.pop_back();
      }
    };
    dfs(dfs, d.initial, 0, 0);
  }
  return {edges.begin(), edges.end()};
}

// -------- Minsky machines --------

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected a positive integer for ") + what +
                     ", got '" + tok + "'");
  }
}

}  // namespace

MinskyMachine parse_minsky(const std::string& text) {
  MinskyMachine m;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("instruction line without 'k:' prefix: " + line);
    int k = parse_int(trimmed(line.substr(0, colon)), "instruction number");
    if (k != static_cast<int>(m.instructions.size()) + 1)
      throw ParseError("instructions must be numbered consecutively from 1; got " +
                       std::to_string(k));
    std::istringstream rest(line.substr(colon + 1));
    std::string op;
    rest >> op;
    MinskyInstruction ins;
    std::string t1, t2, t3;
    if (op == "inc") {
      rest >> t1 >> t2;
      if (t2.empty()) throw ParseError("inc needs a counter and a target: " + line);
      ins.kind = MinskyInstruction::Kind::Incr;
      ins.counter = parse_int(t1, "counter");
      ins.target = parse_int(t2, "target");
    } else if (op == "dec") {
      rest >> t1 >> t2 >> t3;
      if (t3.empty()) throw ParseError("dec needs a counter and two targets: " + line);
      ins.kind = MinskyInstruction::Kind::Decr;
      ins.counter = parse_int(t1, "counter");
      ins.target = parse_int(t2, "target");
      ins.zero_target = parse_int(t3, "zero target");
    } else if (op == "halt") {
      ins.kind = MinskyInstruction::Kind::Halt;
    } else {
      throw ParseError("unknown instruction '" + op + "' in: " + line);
    }
    std::string extra;
    if (rest >> extra) throw ParseError("trailing tokens in: " + line);
    if (ins.kind != MinskyInstruction::Kind::Halt &&
        (ins.counter < 1 || ins.counter > 2))
      throw ParseError("counter must be 1 or 2 in: " + line);
    m.instructions.push_back(ins);
  }
  int n = static_cast<int>(m.instructions.size());
  if (n == 0) throw ParseError("empty machine");
  for (int k = 1; k <= n; ++k) {
    const MinskyInstruction& ins = m.instructions[k - 1];
    bool is_halt = ins.kind == MinskyInstruction::Kind::Halt;
    if (is_halt != (k == n))
      throw ParseError("halt must be exactly the last instruction");
    if (is_halt) continue;
    if (ins.target < 1 || ins.target > n ||
        (ins.kind == MinskyInstruction::Kind::Decr &&
         (ins.zero_target < 1 || ins.zero_target > n)))
      throw ParseError("goto target out of range in instruction " + std::to_string(k));
  }
  return m;
}

MinskyCompilation compile_minsky(const MinskyMachine& m) {
  std::size_t n = m.instructions.size();
  if (n == 0 || m.instructions.back().kind != MinskyInstruction::Kind::Halt)
    throw InvariantError("a machine ends with the halt instruction");
  if (4 + n > 16)
    throw ResourceError("machine too long: the alphabet is capped at 16 letters");

  std::vector<std::string> names = {"_a", "_b", "a", "b"};
  for (std::size_t k = 1; k <= n; ++k) names.push_back(std::to_string(k));
  AlphabetRef al = make_alphabet(names, {{"a", "b"}, {"_a", "_b"}});

  auto tr = [&](const std::string& text) { return foata_normalize(al, text); };
  auto fin = [&](const FoataWord& t) {
    return RecTraceLang::from_finite(al, {t});
  };
  auto counter_name = [](int c) { return std::string(c == 1 ? "a" : "b"); };

  RtlSystem sys{al, {}, {}};
  LevelRegLang anywhere = LevelRegLang::full(al);
  for (std::size_t k = 1; k < n; ++k) {
    const MinskyInstruction& ins = m.instructions[k - 1];
    std::string ks = std::to_string(k);
    std::string c = counter_name(ins.counter);
    if (ins.kind == MinskyInstruction::Kind::Incr) {
      sys.rules.push_back(make_rule("R", anywhere, fin(tr(ks)),
                                    fin(tr(c + std::to_string(ins.target)))));
    } else {
      sys.rules.push_back(make_rule("R", anywhere, fin(tr(c + ks)),
                                    fin(tr(std::to_string(ins.target)))));
      sys.rules.push_back(make_rule("R", anywhere, fin(tr("_" + c + ks)),
                                    fin(tr("_" + c + std::to_string(ins.zero_target)))));
    }
  }
  FoataWord initial = tr("_a_b1");
  RecTraceLang eps = fin(FoataWord(al));
  sys.rules.push_back(make_rule("i", LevelRegLang::from_finite(al, {initial}), eps, eps));
  sys.rules.push_back(
      make_rule("f", LevelRegLang::from_finite(al, {tr(std::to_string(n))}), eps, eps));

  // Final configurations: both markers, then counter letters, then n. The
  // word language already carries every commutation, so from_dfa accepts it.
  Dfa fd(Domain::letters(al));
  State q0 = fd.add_state(), q1a = fd.add_state(), q1b = fd.add_state(),
        q2 = fd.add_state(), q3 = fd.add_state(true);
  fd.initial = q0;
  fd.add_arc(q0, al->letter("_a"), q1a);
  fd.add_arc(q0, al->letter("_b"), q1b);
  fd.add_arc(q1a, al->letter("_b"), q2);
  fd.add_arc(q1b, al->letter("_a"), q2);
  fd.add_arc(q2, al->letter("a"), q2);
  fd.add_arc(q2, al->letter("b"), q2);
  fd.add_arc(q2, al->letter(std::to_string(n)), q3);
  RecTraceLang finals = RecTraceLang::from_dfa(al, fd);

  return MinskyCompilation{
      std::move(sys), std::move(initial), std::move(finals),
      "E x E y (edge(i,x,x) & edge(f,y,y) & edge(*,x,y))"};
}

MinskyVerdict minsky_run(const MinskyMachine& m, std::size_t vertex_budget,
                         const Budget& budget) {
  MinskyCompilation comp = compile_minsky(m);
  AutomaticPresentation pres = compile(comp.system, budget);
  // Configurations gain at most one letter per step, so depth bounds size.
  std::size_t max_letters = 3 + vertex_budget;
  GraphFragment frag =
      bounded_bfs(pres, comp.initial, vertex_budget, max_letters, {"R"}, budget);

  MinskyVerdict verdict;
  verdict.truncated = frag.truncated;
  if (frag.vertices.empty()) return verdict;
  std::vector<std::vector<std::size_t>> adj(frag.vertices.size());
  for (const auto& e : frag.edges) adj[std::get<0>(e)].push_back(std::get<2>(e));
  std::vector<std::size_t> dist(frag.vertices.size(), SIZE_MAX);
  std::deque<std::size_t> queue;
  dist[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    if (comp.final_configs.contains(frag.vertices[i])) {
      verdict.halted = true;
      verdict.depth = dist[i];
      verdict.final_config = frag.vertices[i];
      return verdict;
    }
    for (std::size_t j : adj[i])
      if (dist[j] == SIZE_MAX) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
  }
  return verdict;
}

}  // namespace tracta
