#include "tracta/fo.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tracta/sync.hpp"
#include "tracta/trace_lang.hpp"

namespace tracta {

namespace {

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr fo_edge(std::string label, std::string x, std::string y) {
  Formula f;
  f.kind = Formula::Kind::Edge;
  f.label = std::move(label);
  f.var = std::move(x);
  f.var2 = std::move(y);
  return node(std::move(f));
}

FormulaPtr fo_eq(std::string x, std::string y) {
  Formula f;
  f.kind = Formula::Kind::Eq;
  f.var = std::move(x);
  f.var2 = std::move(y);
  return node(std::move(f));
}

FormulaPtr fo_not(FormulaPtr a) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.lhs = std::move(a);
  return node(std::move(f));
}

namespace {

FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return node(std::move(f));
}

FormulaPtr quantifier(Formula::Kind k, std::string var, FormulaPtr body) {
  Formula f;
  f.kind = k;
  f.var = std::move(var);
  f.lhs = std::move(body);
  return node(std::move(f));
}

}  // namespace

FormulaPtr fo_and(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::And, std::move(a), std::move(b));
}
FormulaPtr fo_or(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::Or, std::move(a), std::move(b));
}
FormulaPtr fo_implies(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr fo_exists(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::Exists, std::move(var), std::move(body));
}
FormulaPtr fo_forall(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::Forall, std::move(var), std::move(body));
}

std::string to_text(const Formula& f) {
  auto wrap = [](const Formula& g) {
    std::string s = to_text(g);
    if (g.kind == Formula::Kind::Edge || g.kind == Formula::Kind::Eq) return s;
    return "(" + s + ")";
  };
  switch (f.kind) {
    case Formula::Kind::Edge:
      return "edge(" + f.label + ", " + f.var + ", " + f.var2 + ")";
    case Formula::Kind::Eq:
      return f.var + " = " + f.var2;
    case Formula::Kind::Not:
      return "!" + wrap(*f.lhs);
    case Formula::Kind::And:
      return wrap(*f.lhs) + " & " + wrap(*f.rhs);
    case Formula::Kind::Or:
      return wrap(*f.lhs) + " | " + wrap(*f.rhs);
    case Formula::Kind::Implies:
      return wrap(*f.lhs) + " -> " + wrap(*f.rhs);
    case Formula::Kind::Exists:
      return "E " + f.var + ". " + to_text(*f.lhs);
    case Formula::Kind::Forall:
      return "A " + f.var + ". " + to_text(*f.lhs);
  }
  throw InvariantError("unhandled formula kind");
}

namespace {

struct Token {
  enum class Kind { Ident, Star, LParen, RParen, Comma, Eq, Bang, Amp, Pipe, Arrow, Dot, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    auto push = [&](Token::Kind k, std::string t) { out.push_back({k, std::move(t), at}); };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      push(Token::Kind::Ident, s.substr(i, j - i));
      i = j;
      continue;
    }
    switch (c) {
      case '*': push(Token::Kind::Star, "*"); break;
      case '(': push(Token::Kind::LParen, "("); break;
      case ')': push(Token::Kind::RParen, ")"); break;
      case ',': push(Token::Kind::Comma, ","); break;
      case '=': push(Token::Kind::Eq, "="); break;
      case '!': push(Token::Kind::Bang, "!"); break;
      case '&': push(Token::Kind::Amp, "&"); break;
      case '|': push(Token::Kind::Pipe, "|"); break;
      case '.': push(Token::Kind::Dot, "."); break;
      case '-':
        if (i + 1 >= s.size() || s[i + 1] != '>')
          throw ParseError("formula: expected '->' at position " + std::to_string(at));
        push(Token::Kind::Arrow, "->");
        ++i;
        break;
      default:
        throw ParseError("formula: unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(at));
    }
    ++i;
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse() {
    FormulaPtr f = implies();
    expect(Token::Kind::End, "end of input");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void fail(const std::string& wanted) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("formula: expected " + wanted + ", got " + got + " at position " +
                     std::to_string(t.pos));
  }

  Token expect(Token::Kind k, const std::string& wanted) {
    if (peek().kind != k) fail(wanted);
    return take();
  }

  std::string variable() {
    Token t = expect(Token::Kind::Ident, "a variable");
    if (t.text == "E" || t.text == "A")
      throw ParseError("formula: '" + t.text + "' is a reserved quantifier, not a variable");
    return t.text;
  }

  FormulaPtr implies() {
    FormulaPtr l = disjunction();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      return fo_implies(std::move(l), implies());
    }
    return l;
  }

  FormulaPtr disjunction() {
    FormulaPtr l = conjunction();
    while (peek().kind == Token::Kind::Pipe) {
      take();
      l = fo_or(std::move(l), conjunction());
    }
    return l;
  }

  FormulaPtr conjunction() {
    FormulaPtr l = unary();
    while (peek().kind == Token::Kind::Amp) {
      take();
      l = fo_and(std::move(l), unary());
    }
    return l;
  }

  FormulaPtr unary() {
    if (peek().kind == Token::Kind::Bang) {
      take();
      return fo_not(unary());
    }
    if (peek().kind == Token::Kind::Ident && (peek().text == "E" || peek().text == "A")) {
      bool exists = take().text == "E";
      std::string v = variable();
      if (peek().kind == Token::Kind::Dot) take();
      FormulaPtr body = implies();  // the body extends as far right as possible
      return exists ? fo_exists(std::move(v), std::move(body))
                    : fo_forall(std::move(v), std::move(body));
    }
    return atom();
  }

  FormulaPtr atom() {
    if (peek().kind == Token::Kind::LParen) {
      take();
      FormulaPtr f = implies();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    if (peek().kind == Token::Kind::Ident && peek().text == "edge" &&
        toks_[at_ + 1].kind == Token::Kind::LParen) {
      take();
      take();
      std::string label;
      if (peek().kind == Token::Kind::Star)
        label = take().text;
      else
        label = expect(Token::Kind::Ident, "an edge label").text;
      expect(Token::Kind::Comma, "','");
      std::string x = variable();
      expect(Token::Kind::Comma, "','");
      std::string y = variable();
      expect(Token::Kind::RParen, "')'");
      return fo_edge(std::move(label), std::move(x), std::move(y));
    }
    if (peek().kind == Token::Kind::Ident) {
      std::string x = variable();
      expect(Token::Kind::Eq, "'='");
      return fo_eq(std::move(x), variable());
    }
    fail("a formula");
  }
};

void walk_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& seen,
               std::vector<std::string>& out) {
  auto visit = [&](const std::string& v) {
    if (!bound.count(v) && seen.insert(v).second) out.push_back(v);
  };
  switch (f.kind) {
    case Formula::Kind::Edge:
    case Formula::Kind::Eq:
      visit(f.var);
      visit(f.var2);
      return;
    case Formula::Kind::Not:
      walk_free(*f.lhs, bound, seen, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      walk_free(*f.lhs, bound, seen, out);
      walk_free(*f.rhs, bound, seen, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool was = bound.count(f.var) != 0;
      bound.insert(f.var);
      walk_free(*f.lhs, bound, seen, out);
      if (!was) bound.erase(f.var);
      return;
    }
  }
}

FormulaPtr rename_walk(const Formula& f, std::map<std::string, std::string>& env,
                       std::set<std::string>& used) {
  auto lookup = [&](const std::string& v) {
    auto it = env.find(v);
    if (it != env.end()) return it->second;
    used.insert(v);  // free occurrence keeps its name
    return v;
  };
  switch (f.kind) {
    case Formula::Kind::Edge:
      return fo_edge(f.label, lookup(f.var), lookup(f.var2));
    case Formula::Kind::Eq:
      return fo_eq(lookup(f.var), lookup(f.var2));
    case Formula::Kind::Not:
      return fo_not(rename_walk(*f.lhs, env, used));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return binary(f.kind, rename_walk(*f.lhs, env, used), rename_walk(*f.rhs, env, used));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string fresh = f.var;
      for (int k = 1; !used.insert(fresh).second; ++k)
        fresh = f.var + "_" + std::to_string(k);
      auto it = env.find(f.var);
      std::optional<std::string> saved;
      if (it != env.end()) saved = it->second;
      env[f.var] = fresh;
      FormulaPtr body = rename_walk(*f.lhs, env, used);
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return quantifier(f.kind, std::move(fresh), std::move(body));
    }
  }
  throw InvariantError("unhandled formula kind");
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, seen;
  std::vector<std::string> out;
  walk_free(f, bound, seen, out);
  return out;
}

FormulaPtr rename_apart(const FormulaPtr& f) {
  std::set<std::string> used;
  for (const auto& v : free_variables(*f)) used.insert(v);
  std::map<std::string, std::string> env;
  return rename_walk(*f, env, used);
}

namespace {

// Shared state of one compilation: the presentation, the vertex-language
// automaton each track must stay inside, and a fixed global order on every
// variable of the (renamed-apart) formula, which fixes track order.
struct CompileCtx {
  const AutomaticPresentation* pres;
  std::size_t cap;
  std::map<std::string, int> order;
  Dfa foata;            // step-domain vertex language
  bool domain_empty;    // quantifiers over an empty vertex set
  std::map<int, Dfa> universes;  // arity >= 2 -> per-track vertex universe
};

// One compiled subformula. `vars` is sorted by CompileCtx::order and names
// the tracks of `dfa`: the plain step domain for one variable, a padded
// tuple for several. Closed subformulas carry `truth` instead.
struct CompiledNode {
  std::vector<std::string> vars;
  Dfa dfa;
  std::optional<bool> truth;
};

void collect_all_vars(const Formula& f, std::map<std::string, int>& order) {
  auto visit = [&](const std::string& v) {
    order.emplace(v, static_cast<int>(order.size()));
  };
  switch (f.kind) {
    case Formula::Kind::Edge:
    case Formula::Kind::Eq:
      visit(f.var);
      visit(f.var2);
      return;
    case Formula::Kind::Not:
      collect_all_vars(*f.lhs, order);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_all_vars(*f.lhs, order);
      collect_all_vars(*f.rhs, order);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      visit(f.var);
      collect_all_vars(*f.lhs, order);
      return;
  }
}

const Dfa& universe(CompileCtx& ctx, int k, const Budget& budget) {
  if (k == 1) return ctx.foata;
  auto it = ctx.universes.find(k);
  if (it != ctx.universes.end()) return it->second;
  Domain td = tuple_domain(ctx.foata.domain, k);
  std::vector<TrackedComponent> parts;
  for (int i = 0; i < k; ++i) parts.push_back({&ctx.foata, {i}});
  return ctx.universes.emplace(k, embed_tracks(td, parts, budget)).first->second;
}

std::vector<std::string> merge_vars(const CompileCtx& ctx, const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](const std::string& x, const std::string& y) {
    return ctx.order.at(x) < ctx.order.at(y);
  });
  return out;
}

// Widens a compiled node to the given variable set (a superset of its own);
// fresh tracks range over the whole vertex language.
Dfa cylindrify(CompileCtx& ctx, const CompiledNode& n, const std::vector<std::string>& target,
               const Budget& budget) {
  if (n.vars == target) return n.dfa;
  Domain td = tuple_domain(ctx.foata.domain, static_cast<int>(target.size()));
  std::vector<int> where;
  for (const auto& v : n.vars) {
    auto it = std::find(target.begin(), target.end(), v);
    where.push_back(static_cast<int>(it - target.begin()));
  }
  std::vector<TrackedComponent> parts;
  parts.push_back({&n.dfa, where});
  for (int i = 0; i < static_cast<int>(target.size()); ++i)
    if (std::find(where.begin(), where.end(), i) == where.end())
      parts.push_back({&ctx.foata, {i}});
  return embed_tracks(td, parts, budget);
}

CompiledNode closed(const CompileCtx& ctx, bool truth) {
  return {{}, empty_dfa(ctx.foata.domain), truth};
}

CompiledNode node_not(CompileCtx& ctx, const CompiledNode& n, const Budget& budget) {
  if (n.truth) return closed(ctx, !*n.truth);
  int k = static_cast<int>(n.vars.size());
  const Dfa& u = universe(ctx, k, budget);
  if (!subset_of(n.dfa, u, budget))
    throw InvariantError("compiled automaton leaves the well-formed universe");
  return {n.vars, minimize(difference(u, n.dfa, budget), budget), std::nullopt};
}

CompiledNode node_exists(CompileCtx& ctx, const CompiledNode& n, const std::string& x,
                         const Budget& budget) {
  if (n.truth) return closed(ctx, *n.truth && !ctx.domain_empty);
  auto it = std::find(n.vars.begin(), n.vars.end(), x);
  if (it == n.vars.end()) return n;  // vacuous over a nonempty domain
  if (n.vars.size() == 1) return closed(ctx, !is_empty(n.dfa));
  std::vector<int> keep;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n.vars.size(); ++i)
    if (n.vars[i] != x) {
      keep.push_back(static_cast<int>(i));
      vars.push_back(n.vars[i]);
    }
  return {std::move(vars), project_tracks(n.dfa, keep, budget), std::nullopt};
}

CompiledNode compile_node(CompileCtx& ctx, const Formula& f) {
  // Children first, so a budget error is charged to the connective that
  // actually overflowed, not to every enclosing formula.
  try {
    Budget budget(ctx.cap);
    switch (f.kind) {
      case Formula::Kind::Edge: {
        auto rt = ctx.pres->relations.find(f.label);
        if (rt == ctx.pres->relations.end()) {
          if (f.label == "*")
            throw InvariantError("reachability relation not automatic for this system");
          throw InvariantError("unknown edge label '" + f.label + "'");
        }
        if (f.var == f.var2) {
          Dfa diag = intersect(rt->second.pair_dfa(), identity(ctx.foata, budget).pair_dfa(),
                               budget);
          return {{f.var}, project_tracks(diag, {0}, budget), std::nullopt};
        }
        Dfa d = minimize(intersect(rt->second.pair_dfa(), universe(ctx, 2, budget), budget),
                         budget);
        if (ctx.order.at(f.var) < ctx.order.at(f.var2))
          return {{f.var, f.var2}, std::move(d), std::nullopt};
        return {{f.var2, f.var}, project_tracks(d, {1, 0}, budget), std::nullopt};
      }
      case Formula::Kind::Eq: {
        if (f.var == f.var2) return {{f.var}, ctx.foata, std::nullopt};
        std::vector<std::string> vars = merge_vars(ctx, {f.var}, {f.var2});
        return {std::move(vars), identity(ctx.foata, budget).pair_dfa(), std::nullopt};
      }
      case Formula::Kind::Not:
        return node_not(ctx, compile_node(ctx, *f.lhs), budget);
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies: {
        CompiledNode l = compile_node(ctx, *f.lhs);
        CompiledNode r = compile_node(ctx, *f.rhs);
        if (f.kind == Formula::Kind::Implies) {
          // l -> r compiled as !l | r at this node.
          if (l.truth) return *l.truth ? r : closed(ctx, true);
          l = node_not(ctx, l, budget);
        } else if (l.truth) {
          bool lt = *l.truth;
          if (f.kind == Formula::Kind::And) return lt ? r : closed(ctx, false);
          return lt ? closed(ctx, true) : r;
        }
        if (r.truth) {
          bool rt = *r.truth;
          if (f.kind == Formula::Kind::And) return rt ? l : closed(ctx, false);
          return rt ? closed(ctx, true) : l;  // for Implies, l is already negated
        }
        std::vector<std::string> target = merge_vars(ctx, l.vars, r.vars);
        Dfa el = cylindrify(ctx, l, target, budget);
        Dfa er = cylindrify(ctx, r, target, budget);
        Dfa d = f.kind == Formula::Kind::And
                    ? minimize(intersect(el, er, budget), budget)
                    : minimize(determinize(union_nfa(el, er), budget), budget);
        return {std::move(target), std::move(d), std::nullopt};
      }
      case Formula::Kind::Exists:
        return node_exists(ctx, compile_node(ctx, *f.lhs), f.var, budget);
      case Formula::Kind::Forall: {
        CompiledNode body = compile_node(ctx, *f.lhs);
        CompiledNode inner = node_not(ctx, body, budget);
        CompiledNode ex = node_exists(ctx, inner, f.var, budget);
        return node_not(ctx, ex, budget);
      }
    }
    throw InvariantError("unhandled formula kind");
  } catch (const ResourceError& e) {
    std::string what = e.what();
    if (what.find(" while compiling ") != std::string::npos) throw;
    throw ResourceError(what + " while compiling " + to_text(f));
  }
}

}  // namespace

AssignmentAutomaton compile_formula(const FormulaPtr& f, const AutomaticPresentation& pres,
                                    const std::vector<std::string>& var_order,
                                    const Budget& budget) {
  FormulaPtr renamed = rename_apart(f);
  CompileCtx ctx{&pres, budget.cap(), {}, pres.vertices.step_dfa(), false, {}};
  ctx.domain_empty = is_empty(ctx.foata);
  collect_all_vars(*renamed, ctx.order);
  CompiledNode n = compile_node(ctx, *renamed);

  AssignmentAutomaton out{pres.alpha, n.vars, Dfa(ctx.foata.domain), n.truth};
  if (n.truth) {
    if (!var_order.empty()) throw InvariantError("formula is closed, no variable order applies");
    out.dfa = *n.truth ? universal_dfa(ctx.foata.domain) : empty_dfa(ctx.foata.domain);
    return out;
  }
  out.dfa = std::move(n.dfa);
  if (!var_order.empty()) {
    if (std::set<std::string>(var_order.begin(), var_order.end()) !=
            std::set<std::string>(out.vars.begin(), out.vars.end()) ||
        var_order.size() != out.vars.size())
      throw InvariantError("variable order must be a permutation of the free variables");
    if (var_order != out.vars) {
      std::vector<int> keep;
      for (const auto& v : var_order) {
        auto it = std::find(out.vars.begin(), out.vars.end(), v);
        keep.push_back(static_cast<int>(it - out.vars.begin()));
      }
      out.dfa = project_tracks(out.dfa, keep, budget);
      out.vars = var_order;
    }
  }
  return out;
}

bool decide(const FormulaPtr& sentence, const AutomaticPresentation& pres, const Budget& budget) {
  AssignmentAutomaton aa = compile_formula(sentence, pres, {}, budget);
  if (!aa.truth) {
    std::string vs;
    for (const auto& v : aa.vars) vs += (vs.empty() ? "" : ", ") + v;
    throw InvariantError("sentence has free variables: " + vs);
  }
  return *aa.truth;
}

std::optional<std::map<std::string, FoataWord>> witness(const FormulaPtr& f,
                                                        const AutomaticPresentation& pres,
                                                        const Budget& budget) {
  AssignmentAutomaton aa = compile_formula(f, pres, {}, budget);
  if (aa.truth) {
    if (*aa.truth) return std::map<std::string, FoataWord>{};
    return std::nullopt;
  }
  auto sw = shortest_word(aa.dfa);
  if (!sw) return std::nullopt;
  std::vector<Word> least = enumerate_words(aa.dfa, sw->size(), 1);
  std::map<std::string, FoataWord> out;
  if (aa.vars.size() == 1) {
    out.emplace(aa.vars[0], from_step_word(pres.alpha, least.front()));
  } else {
    std::vector<Word> tracks = deconvolve(aa.dfa.domain, least.front());
    for (std::size_t i = 0; i < aa.vars.size(); ++i)
      out.emplace(aa.vars[i], from_step_word(pres.alpha, tracks[i]));
  }
  return out;
}

bool holds(const FormulaPtr& f, const AutomaticPresentation& pres,
           const std::map<std::string, FoataWord>& constants, const Budget& budget) {
  AssignmentAutomaton aa = compile_formula(f, pres, {}, budget);
  if (aa.truth) return *aa.truth;
  for (const auto& v : aa.vars) {
    auto it = constants.find(v);
    if (it == constants.end())
      throw InvariantError("no constant for free variable '" + v + "'");
    if (!same_alphabet(it->second.alphabet(), pres.alpha))
      throw InvariantError("constant for '" + v + "' is over a different alphabet");
  }
  if (aa.vars.size() == 1)
    return !is_empty(
        intersect(aa.dfa, word_set_dfa(aa.dfa.domain, {step_word(constants.at(aa.vars[0]))}),
                  budget));
  std::vector<Dfa> singles;
  singles.reserve(aa.vars.size());
  for (const auto& v : aa.vars)
    singles.push_back(word_set_dfa(aa.dfa.domain.base_domain(), {step_word(constants.at(v))}));
  std::vector<TrackedComponent> parts;
  for (std::size_t i = 0; i < singles.size(); ++i)
    parts.push_back({&singles[i], {static_cast<int>(i)}});
  Dfa constraint = embed_tracks(aa.dfa.domain, parts, budget);
  return !is_empty(intersect(aa.dfa, constraint, budget));
}

ExplicitGraph explicit_graph(AlphabetRef alpha, const std::vector<GraphEdge>& edges) {
  ExplicitGraph g{std::move(alpha), {}, {}};
  std::set<FoataWord> vs;
  for (const auto& e : edges) {
    vs.insert(e.src);
    vs.insert(e.dst);
  }
  g.vertices.assign(vs.begin(), vs.end());
  std::map<FoataWord, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (const auto& e : edges) g.edges[e.label].insert({index.at(e.src), index.at(e.dst)});
  return g;
}

namespace {

bool naive_eval(const Formula& f, const ExplicitGraph& g,
                std::map<std::string, std::size_t>& env) {
  switch (f.kind) {
    case Formula::Kind::Edge: {
      auto it = g.edges.find(f.label);
      if (it == g.edges.end()) return false;
      return it->second.count({env.at(f.var), env.at(f.var2)}) != 0;
    }
    case Formula::Kind::Eq:
      return env.at(f.var) == env.at(f.var2);
    case Formula::Kind::Not:
      return !naive_eval(*f.lhs, g, env);
    case Formula::Kind::And:
      return naive_eval(*f.lhs, g, env) && naive_eval(*f.rhs, g, env);
    case Formula::Kind::Or:
      return naive_eval(*f.lhs, g, env) || naive_eval(*f.rhs, g, env);
    case Formula::Kind::Implies:
      return !naive_eval(*f.lhs, g, env) || naive_eval(*f.rhs, g, env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto it = env.find(f.var);
      std::optional<std::size_t> saved;
      if (it != env.end()) saved = it->second;
      bool result = f.kind == Formula::Kind::Forall;
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        env[f.var] = i;
        bool b = naive_eval(*f.lhs, g, env);
        if (f.kind == Formula::Kind::Exists && b) {
          result = true;
          break;
        }
        if (f.kind == Formula::Kind::Forall && !b) {
          result = false;
          break;
        }
      }
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return result;
    }
  }
  throw InvariantError("unhandled formula kind");
}

}  // namespace

bool naive_decide(const FormulaPtr& sentence, const ExplicitGraph& g) {
  if (!free_variables(*sentence).empty())
    throw InvariantError("naive evaluation needs a closed sentence");
  std::map<std::string, std::size_t> env;
  return naive_eval(*sentence, g, env);
}

}  // namespace tracta
