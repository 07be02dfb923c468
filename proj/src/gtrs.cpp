#include "tracta/gtrs.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <tuple>

namespace tracta {

namespace {

using NodeMap = std::map<Position, int>;

// Nodes at or below u form one contiguous map range: extensions of u sort
// after u and before u with its last index bumped.
std::pair<NodeMap::const_iterator, NodeMap::const_iterator> subtree_range(
    const NodeMap& nodes, const Position& u) {
  auto lo = nodes.lower_bound(u);
  if (u.empty()) return {lo, nodes.end()};
  Position succ = u;
  ++succ.back();
  return {lo, nodes.lower_bound(succ)};
}

// Matching every node of s at the shifted position suffices: equal symbols
// force equal arities, so the two domains line up automatically.
bool equal_at(const GroundTerm& t, const Position& p, const GroundTerm& s) {
  Position q = p;
  for (const auto& [u, sym] : s.nodes) {
    q.resize(p.size());
    q.insert(q.end(), u.begin(), u.end());
    auto it = t.nodes.find(q);
    if (it == t.nodes.end() || it->second != sym) return false;
  }
  return true;
}

int root_symbol(const GroundTerm& t) { return t.nodes.begin()->second; }

void render_at(const GroundTerm& t, Position& u, std::string& out) {
  int sym = t.nodes.at(u);
  out += t.ranked->name(sym);
  int ar = t.ranked->arity(sym);
  if (ar == 0) return;
  out += '(';
  for (int i = 1; i <= ar; ++i) {
    if (i > 1) out += ',';
    u.push_back(i);
    render_at(t, u, out);
    u.pop_back();
  }
  out += ')';
}

}  // namespace

RankedAlphabet::RankedAlphabet(std::vector<std::pair<std::string, int>> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvariantError("ranked alphabet needs at least one symbol");
  std::set<std::string> seen;
  for (const auto& [name, arity] : symbols_) {
    if (name.empty()) throw InvariantError("empty symbol name");
    for (char ch : name)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw InvariantError("symbol name '" + name + "' is not alphanumeric");
    if (!seen.insert(name).second) throw InvariantError("duplicate symbol '" + name + "'");
    if (arity < 0) throw InvariantError("symbol '" + name + "' has negative arity");
  }
}

std::optional<int> RankedAlphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i].first == name) return i;
  return std::nullopt;
}

RankedAlphabetRef make_ranked_alphabet(std::vector<std::pair<std::string, int>> symbols) {
  return std::make_shared<const RankedAlphabet>(std::move(symbols));
}

bool position_le(const Position& p, const Position& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

std::string render_position(const Position& p) {
  if (p.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

int GroundTerm::symbol_at(const Position& u) const {
  auto it = nodes.find(u);
  if (it == nodes.end())
    throw InvariantError("position " + render_position(u) + " not in term");
  return it->second;
}

GroundTerm GroundTerm::subterm(const Position& u) const {
  if (!defined_at(u))
    throw InvariantError("position " + render_position(u) + " not in term");
  GroundTerm s;
  s.ranked = ranked;
  auto [lo, hi] = subtree_range(nodes, u);
  for (auto it = lo; it != hi; ++it)
    s.nodes.emplace(Position(it->first.begin() + u.size(), it->first.end()),
                    it->second);
  return s;
}

GroundTerm GroundTerm::replace(const Position& u, const GroundTerm& s) const {
  if (!defined_at(u))
    throw InvariantError("position " + render_position(u) + " not in term");
  if (s.ranked != ranked)
    throw InvariantError("replacement term uses a different alphabet");
  GroundTerm out;
  out.ranked = ranked;
  auto [lo, hi] = subtree_range(nodes, u);
  out.nodes.insert(nodes.begin(), lo);
  out.nodes.insert(hi, nodes.end());
  for (const auto& [p, sym] : s.nodes) {
    Position q = u;
    q.insert(q.end(), p.begin(), p.end());
    out.nodes.emplace(std::move(q), sym);
  }
  return out;
}

std::string GroundTerm::render() const {
  std::string out;
  Position u;
  render_at(*this, u, out);
  return out;
}

bool GroundTerm::operator<(const GroundTerm& o) const {
  if (nodes.size() != o.nodes.size()) return nodes.size() < o.nodes.size();
  return nodes < o.nodes;
}

GroundTerm make_term(const RankedAlphabetRef& ranked, std::string_view sym,
                     std::vector<GroundTerm> children) {
  if (!ranked) throw InvariantError("term needs a ranked alphabet");
  auto id = ranked->find(sym);
  if (!id) throw InvariantError("unknown symbol '" + std::string(sym) + "'");
  int want = ranked->arity(*id);
  if (static_cast<int>(children.size()) != want)
    throw InvariantError("symbol '" + std::string(sym) + "' takes " +
                         std::to_string(want) + " children, got " +
                         std::to_string(children.size()));
  GroundTerm t;
  t.ranked = ranked;
  t.nodes.emplace(Position{}, *id);
  for (int i = 0; i < static_cast<int>(children.size()); ++i) {
    if (children[i].ranked != ranked)
      throw InvariantError("child term uses a different alphabet");
    for (const auto& [p, s] : children[i].nodes) {
      Position q;
      q.reserve(p.size() + 1);
      q.push_back(i + 1);
      q.insert(q.end(), p.begin(), p.end());
      t.nodes.emplace(std::move(q), s);
    }
  }
  return t;
}

namespace {

struct TermParser {
  const RankedAlphabetRef& ranked;
  std::string_view text;
  std::size_t at = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("bad term at offset " + std::to_string(at) + ": " + msg);
  }
  void skip_ws() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }
  bool eat(char c) {
    skip_ws();
    if (at < text.size() && text[at] == c) {
      ++at;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = at;
    while (at < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[at])) || text[at] == '_'))
      ++at;
    if (at == start) fail("expected a symbol name");
    return std::string(text.substr(start, at - start));
  }
  GroundTerm term() {
    std::string sym = ident();
    auto id = ranked->find(sym);
    if (!id) fail("unknown symbol '" + sym + "'");
    std::vector<GroundTerm> kids;
    if (eat('(')) {
      do {
        kids.push_back(term());
      } while (eat(','));
      if (!eat(')')) fail("expected ',' or ')'");
    }
    int want = ranked->arity(*id);
    if (static_cast<int>(kids.size()) != want)
      fail("symbol '" + sym + "' takes " + std::to_string(want) +
           " arguments, got " + std::to_string(kids.size()));
    return make_term(ranked, sym, std::move(kids));
  }
};

}  // namespace

GroundTerm parse_term(const RankedAlphabetRef& ranked, std::string_view text) {
  if (!ranked) throw InvariantError("term needs a ranked alphabet");
  TermParser p{ranked, text};
  GroundTerm t = p.term();
  p.skip_ws();
  if (p.at != text.size()) p.fail("trailing input");
  return t;
}

int Gtrs::size_delta() const {
  int d = 0;
  for (const auto& r : rules)
    d = std::max(d, std::abs(r.rhs.size() - r.lhs.size()));
  return d;
}

int Gtrs::max_rule_size() const {
  int m = 0;
  for (const auto& r : rules) m = std::max({m, r.lhs.size(), r.rhs.size()});
  return m;
}

Gtrs make_gtrs(RankedAlphabetRef ranked, std::vector<std::string> labels,
               std::vector<GtrsRule> rules, GroundTerm initial) {
  if (!ranked) throw InvariantError("system needs a ranked alphabet");
  std::set<std::string> known;
  for (const auto& l : labels) {
    if (l.empty()) throw InvariantError("empty edge label");
    if (!known.insert(l).second) throw InvariantError("duplicate edge label '" + l + "'");
  }
  for (const auto& r : rules) {
    if (!known.count(r.label))
      throw InvariantError("rule label '" + r.label + "' missing from the label alphabet");
    if (r.lhs.ranked != ranked || r.rhs.ranked != ranked)
      throw InvariantError("rule term uses a different alphabet");
    if (r.lhs == r.rhs)
      throw InvariantError("rule '" + r.label +
                           "' has equal sides; a step never maps a term to itself");
  }
  if (initial.ranked != ranked)
    throw InvariantError("initial term uses a different alphabet");
  return Gtrs{std::move(ranked), std::move(labels), std::move(rules), std::move(initial)};
}

Gtrs grid_gtrs() {
  auto fr = make_ranked_alphabet(
      {{"c", 2}, {"s1", 1}, {"bot1", 0}, {"s2", 1}, {"bot2", 0}});
  return make_gtrs(fr, {"a", "b"},
                   {{"a", parse_term(fr, "bot1"), parse_term(fr, "s1(bot1)")},
                    {"b", parse_term(fr, "bot2"), parse_term(fr, "s2(bot2)")}},
                   parse_term(fr, "c(bot1,bot2)"));
}

bool RewriteStep::operator<(const RewriteStep& o) const {
  return std::tie(pos, label, target) < std::tie(o.pos, o.label, o.target);
}

bool FragmentEdge::operator<(const FragmentEdge& o) const {
  return std::tie(src, label, dst) < std::tie(o.src, o.label, o.dst);
}

std::vector<RewriteStep> rewrite_edges(const Gtrs& g, const GroundTerm& t) {
  if (t.ranked != g.ranked)
    throw InvariantError("term uses a different alphabet than the system");
  std::set<RewriteStep> out;
  for (const auto& [p, sym] : t.nodes)
    for (const auto& r : g.rules) {
      if (root_symbol(r.lhs) != sym || !equal_at(t, p, r.lhs)) continue;
      out.insert(RewriteStep{p, r.label, t.replace(p, r.rhs)});
    }
  return {out.begin(), out.end()};
}

namespace {

// Exploration with the terms still at hand (the public fragment keeps only
// rendered names). open[v]: v has a rewrite whose target was not admitted.
struct Explored {
  std::vector<GroundTerm> terms;
  std::vector<FragmentEdge> edges;
  std::vector<char> open;
  bool truncated = false;
};

Explored explore_terms(const Gtrs& g, int budget) {
  if (budget <= 0) throw InvariantError("exploration budget must be positive");
  Explored out;
  std::map<GroundTerm, int> id;
  id.emplace(g.initial, 0);
  out.terms.push_back(g.initial);
  std::vector<int> layer{0};
  while (!layer.empty()) {
    // Collect the next layer first, then admit smallest-first so the budget
    // cut lands at a deterministic point.
    std::set<GroundTerm> next;
    for (int v : layer)
      for (const auto& st : rewrite_edges(g, out.terms[v]))
        if (!id.count(st.target)) next.insert(st.target);
    std::vector<int> admitted;
    for (const auto& t : next) {
      if (static_cast<int>(out.terms.size()) >= budget) break;
      int v = static_cast<int>(out.terms.size());
      id.emplace(t, v);
      out.terms.push_back(t);
      admitted.push_back(v);
    }
    layer = std::move(admitted);
  }
  out.open.assign(out.terms.size(), 0);
  std::set<FragmentEdge> edges;
  for (int v = 0; v < static_cast<int>(out.terms.size()); ++v)
    for (const auto& st : rewrite_edges(g, out.terms[v])) {
      auto it = id.find(st.target);
      if (it == id.end()) {
        out.open[v] = 1;
        out.truncated = true;
        continue;
      }
      edges.insert(FragmentEdge{v, st.label, it->second});
    }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace

TermGraphFragment explore(const Gtrs& g, int budget) {
  Explored e = explore_terms(g, budget);
  TermGraphFragment f;
  f.vertices.reserve(e.terms.size());
  for (const auto& t : e.terms) f.vertices.push_back(t.render());
  f.edges = std::move(e.edges);
  f.truncated = e.truncated;
  return f;
}

TermGraphFragment tree_of(const TermGraphFragment& g, const std::string& root,
                          int depth) {
  if (depth < 0) throw InvariantError("copy depth must be nonnegative");
  int r = -1;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (g.vertices[i] == root) {
      r = i;
      break;
    }
  if (r < 0)
    throw InvariantError("root '" + root + "' is not a vertex of the graph");
  for (const auto& e : g.edges)
    if (e.label == "c")
      throw InvariantError("the graph already uses the copy label 'c'");

  int k = static_cast<int>(g.vertices.size());
  double total = depth > 0 ? 1 : 0;
  double pw = 1;
  for (int len = 1; len <= depth + 1; ++len) {
    pw *= k;
    total += pw;
    if (total > static_cast<double>(Limits::defaults().state_budget))
      throw ResourceError("graph copies exceed the state budget");
  }

  // Copy paths ordered by (length, lex); vertex ids follow that order.
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> id;
  auto add = [&](std::vector<int> w) {
    id.emplace(w, static_cast<int>(words.size()));
    words.push_back(std::move(w));
  };
  if (depth > 0) add({});
  std::vector<std::vector<int>> cur{{}};
  for (int len = 1; len <= depth + 1; ++len) {
    std::vector<std::vector<int>> nxt;
    for (const auto& u : cur)
      for (int v = 0; v < k; ++v) {
        auto w = u;
        w.push_back(v);
        nxt.push_back(std::move(w));
      }
    for (const auto& w : nxt) add(w);
    cur = std::move(nxt);
  }

  std::set<FragmentEdge> edges;
  for (const auto& [w, wi] : id) {
    if (w.empty()) continue;
    for (const auto& e : g.edges) {
      if (e.src != w.back()) continue;
      auto t = w;
      t.back() = e.dst;
      edges.insert(FragmentEdge{wi, e.label, id.at(t)});
    }
  }
  if (depth > 0)
    for (const auto& [w, wi] : id) {
      if (static_cast<int>(w.size()) > depth) continue;
      auto t = w;
      t.push_back(r);
      edges.insert(FragmentEdge{wi, "c", id.at(t)});
    }

  TermGraphFragment out;
  out.vertices.reserve(words.size());
  for (const auto& w : words) {
    if (w.empty()) {
      out.vertices.emplace_back("ε");
      continue;
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "·";
      s += g.vertices[w[i]];
    }
    out.vertices.push_back(std::move(s));
  }
  out.edges.assign(edges.begin(), edges.end());
  out.truncated = true;  // the full unravelling is infinite
  return out;
}

namespace {

// Component view for signature computation: local ids, frontier bits,
// labelled edges.
struct CompView {
  int n = 0;
  std::vector<char> frontier;
  std::vector<std::tuple<int, std::string, int>> edges;
};

// Color refinement: rounds of canonical renumbering by (color, sorted out-
// and in-profiles) until the partition stops splitting. The numbering is a
// function of the round history alone, so isomorphic inputs end identically.
std::vector<int> refine_colors(const CompView& g, std::vector<int> col) {
  auto classes = [](const std::vector<int>& c) {
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
  };
  for (;;) {
    std::vector<std::vector<std::string>> outp(g.n), inp(g.n);
    for (const auto& [s, l, d] : g.edges) {
      outp[s].push_back(l + '>' + std::to_string(col[d]));
      inp[d].push_back(l + '<' + std::to_string(col[s]));
    }
    std::vector<std::string> key(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::sort(outp[v].begin(), outp[v].end());
      std::sort(inp[v].begin(), inp[v].end());
      key[v] = std::to_string(col[v]);
      for (const auto& s : outp[v]) {
        key[v] += '|';
        key[v] += s;
      }
      key[v] += '#';
      for (const auto& s : inp[v]) {
        key[v] += '|';
        key[v] += s;
      }
    }
    std::map<std::string, int> rank;
    for (const auto& s : key) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, rk] : rank) rk = next++;
    std::vector<int> ncol(g.n);
    for (int v = 0; v < g.n; ++v) ncol[v] = rank[key[v]];
    bool stable = classes(ncol) == classes(col);
    col = std::move(ncol);
    if (stable) return col;
  }
}

std::string encode(const CompView& g, const std::vector<int>& slot) {
  std::string s = "v" + std::to_string(g.n) + ";f";
  std::string fb(g.n, '0');
  for (int v = 0; v < g.n; ++v)
    if (g.frontier[v]) fb[slot[v]] = '1';
  s += fb;
  s += ";e";
  std::vector<std::string> es;
  es.reserve(g.edges.size());
  for (const auto& [a, l, b] : g.edges)
    es.push_back(std::to_string(slot[a]) + '>' + l + '>' + std::to_string(slot[b]));
  std::sort(es.begin(), es.end());
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += ',';
    s += es[i];
  }
  return s;
}

// Individualization-refinement canonical form: refine, split the first tied
// color class every way, keep the smallest encoding.
void canon_search(const CompView& g, const std::vector<int>& col0,
                  std::string& best, int& leaves) {
  std::vector<int> col = refine_colors(g, col0);
  int cls = 1 + *std::max_element(col.begin(), col.end());
  if (cls == g.n) {
    if (++leaves > 100000)
      throw ResourceError("canonical labelling search exceeded its budget");
    std::string enc = encode(g, col);
    if (best.empty() || enc < best) best = std::move(enc);
    return;
  }
  std::vector<int> cnt(cls, 0);
  for (int c : col) ++cnt[c];
  int target = 0;
  while (cnt[target] <= 1) ++target;
  for (int v = 0; v < g.n; ++v) {
    if (col[v] != target) continue;
    auto col2 = col;
    col2[v] = cls;
    canon_search(g, col2, best, leaves);
  }
}

std::string fnv_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::pair<std::string, bool> signature_of(const CompView& g) {
  std::vector<int> init(g.n);
  for (int v = 0; v < g.n; ++v) init[v] = g.frontier[v] ? 1 : 0;
  if (g.n <= 12) {
    std::string best;
    int leaves = 0;
    canon_search(g, init, best, leaves);
    return {"exact:" + best, true};
  }
  std::vector<int> col = refine_colors(g, init);
  std::string s = "v" + std::to_string(g.n) + ";h";
  std::map<int, int> hist;
  for (int c : col) ++hist[c];
  for (const auto& [c, k] : hist) s += "(" + std::to_string(c) + ":" + std::to_string(k) + ")";
  s += ";f";
  std::map<int, int> fh;
  for (int v = 0; v < g.n; ++v)
    if (g.frontier[v]) ++fh[col[v]];
  for (const auto& [c, k] : fh) s += "(" + std::to_string(c) + ":" + std::to_string(k) + ")";
  s += ";p";
  std::map<std::tuple<int, std::string, int>, int> prof;
  for (const auto& [a, l, b] : g.edges) ++prof[{col[a], l, col[b]}];
  for (const auto& [e, k] : prof)
    s += "(" + std::to_string(std::get<0>(e)) + ">" + std::get<1>(e) + ">" +
         std::to_string(std::get<2>(e)) + ":" + std::to_string(k) + ")";
  return {"wl:" + fnv_hex(s), false};
}

}  // namespace

std::vector<SizeComponent> decompose(const Gtrs& g, int n, int budget) {
  if (n < 0) throw InvariantError("size cut must be nonnegative");
  Explored e = explore_terms(g, budget);
  int nv = static_cast<int>(e.terms.size());
  std::vector<int> sz(nv);
  for (int i = 0; i < nv; ++i) sz[i] = e.terms[i].size();

  std::vector<FragmentEdge> kept, dropped;
  for (const auto& ed : e.edges)
    (sz[ed.src] < n || sz[ed.dst] < n ? dropped : kept).push_back(ed);

  std::vector<int> uf(nv);
  for (int i = 0; i < nv; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& ed : kept) uf[find(ed.src)] = find(ed.dst);

  // Only endpoints of surviving edges belong to components; vertices whose
  // every edge was dropped fall out of the decomposition.
  std::vector<char> ink(nv, 0), cut(nv, 0);
  for (const auto& ed : kept) ink[ed.src] = ink[ed.dst] = 1;
  for (const auto& ed : dropped) cut[ed.src] = cut[ed.dst] = 1;

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < nv; ++i)
    if (ink[i]) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> order;
  for (auto& [root, members] : groups) order.push_back(std::move(members));
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<SizeComponent> out;
  for (const auto& members : order) {
    SizeComponent c;
    std::map<int, int> local;
    for (int gid : members) {
      local.emplace(gid, static_cast<int>(c.fragment.vertices.size()));
      c.fragment.vertices.push_back(e.terms[gid].render());
    }
    for (const auto& ed : kept) {
      auto it = local.find(ed.src);
      if (it == local.end()) continue;
      c.fragment.edges.push_back(FragmentEdge{it->second, ed.label, local.at(ed.dst)});
    }
    std::sort(c.fragment.edges.begin(), c.fragment.edges.end());
    c.min_size = sz[members.front()];
    for (int gid : members) {
      c.min_size = std::min(c.min_size, sz[gid]);
      if (cut[gid]) c.frontier.push_back(local.at(gid));
      if (e.open[gid]) c.approximate = true;
    }
    std::sort(c.frontier.begin(), c.frontier.end());
    c.fragment.truncated = c.approximate;
    CompView view;
    view.n = static_cast<int>(c.fragment.vertices.size());
    view.frontier.assign(view.n, 0);
    for (int v : c.frontier) view.frontier[v] = 1;
    for (const auto& ed : c.fragment.edges)
      view.edges.emplace_back(ed.src, ed.label, ed.dst);
    auto [sig, exact] = signature_of(view);
    c.signature = std::move(sig);
    c.exact = exact;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<Position> matching_positions(const Gtrs& g, const GroundTerm& t,
                                         bool include_rhs) {
  if (t.ranked != g.ranked)
    throw InvariantError("term uses a different alphabet than the system");
  std::set<Position> out;
  for (const auto& [p, sym] : t.nodes)
    for (const auto& r : g.rules) {
      if (root_symbol(r.lhs) == sym && equal_at(t, p, r.lhs)) out.insert(p);
      if (include_rhs && root_symbol(r.rhs) == sym && equal_at(t, p, r.rhs))
        out.insert(p);
    }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Position> redex_positions(const Gtrs& g, const GroundTerm& t) {
  return matching_positions(g, t, false);
}

std::vector<Position> incident_positions(const Gtrs& g, const GroundTerm& t) {
  return matching_positions(g, t, true);
}

std::optional<Position> min_rewrite_position(const Gtrs& g, const GroundTerm& t) {
  auto inc = incident_positions(g, t);
  if (inc.empty()) return std::nullopt;
  // A least element, if any, is the lexicographic minimum: it is a prefix of
  // everything, and prefixes sort first.
  for (const auto& p : inc)
    if (!position_le(inc.front(), p)) return std::nullopt;
  return inc.front();
}

bool check_positions_comparable(const Gtrs& g, const GroundTerm& t) {
  auto inc = incident_positions(g, t);
  if (inc.empty()) return true;
  for (const auto& p : inc)
    if (!position_le(inc.front(), p)) return false;
  return true;
}

}  // namespace tracta
