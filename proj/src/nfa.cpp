#include "tracta/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tracta {

void Dfa::add_arc(State s, Symbol x, State t) {
  auto& row = delta[s];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(x, State{0}),
                             [](const auto& p, const auto& q) { return p.first < q.first; });
  if (it != row.end() && it->first == x) {
    if (it->second != t) throw InvariantError("conflicting arcs make the automaton nondeterministic");
    return;
  }
  row.insert(it, {x, t});
}

std::optional<State> Dfa::step(State s, Symbol x) const {
  const auto& row = delta[s];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(x, State{0}),
                             [](const auto& p, const auto& q) { return p.first < q.first; });
  if (it != row.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::optional<State> Dfa::run(const Word& w) const {
  if (delta.empty()) return std::nullopt;
  State s = initial;
  for (Symbol x : w) {
    auto t = step(s, x);
    if (!t) return std::nullopt;
    s = *t;
  }
  return s;
}

bool Dfa::accepts(const Word& w) const {
  auto s = run(w);
  return s && is_final(*s);
}

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.domain);
  n.delta = d.delta;
  n.finals = d.finals;
  if (!d.delta.empty()) n.initials = {d.initial};
  return n;
}

namespace {

std::vector<State> eps_closure(const Nfa& n, std::vector<State> states) {
  std::set<State> seen(states.begin(), states.end());
  std::vector<State> todo(states.begin(), states.end());
  while (!todo.empty()) {
    State s = todo.back();
    todo.pop_back();
    for (const auto& [x, t] : n.delta[s])
      if (x == kEps && seen.insert(t).second) todo.push_back(t);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Dfa determinize(const Nfa& n, const Budget& budget) {
  Dfa out(n.domain);
  std::map<std::vector<State>, State> index;
  std::deque<std::vector<State>> queue;

  auto intern = [&](std::vector<State> subset) -> State {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    bool fin = std::any_of(subset.begin(), subset.end(),
                           [&](State s) { return n.finals[s] != 0; });
    State id = out.add_state(fin);
    budget.charge(1, "subset construction");
    index.emplace(subset, id);
    queue.push_back(std::move(subset));
    return id;
  };

  intern(eps_closure(n, n.initials));
  out.initial = 0;
  while (!queue.empty()) {
    auto subset = queue.front();
    queue.pop_front();
    State from = index[subset];
    std::map<Symbol, std::set<State>> moves;
    for (State s : subset)
      for (const auto& [x, t] : n.delta[s])
        if (x != kEps) moves[x].insert(t);
    for (auto& [x, targets] : moves) {
      State to = intern(eps_closure(n, {targets.begin(), targets.end()}));
      out.add_arc(from, x, to);
    }
  }
  return out;
}

Dfa trim(const Dfa& d) {
  if (d.delta.empty()) return empty_dfa(d.domain);
  std::size_t n = d.num_states();
  // Forward reachability.
  std::vector<char> reach(n, 0);
  std::vector<State> todo{d.initial};
  reach[d.initial] = 1;
  while (!todo.empty()) {
    State s = todo.back();
    todo.pop_back();
    for (const auto& [x, t] : d.delta[s])
      if (!reach[t]) {
        reach[t] = 1;
        todo.push_back(t);
      }
  }
  // Backward from finals over reachable states.
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    if (reach[s])
      for (const auto& [x, t] : d.delta[s])
        if (reach[t]) rev[t].push_back(s);
  std::vector<char> live(n, 0);
  for (State s = 0; s < n; ++s)
    if (reach[s] && d.finals[s]) {
      live[s] = 1;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    State s = todo.back();
    todo.pop_back();
    for (State p : rev[s])
      if (!live[p]) {
        live[p] = 1;
        todo.push_back(p);
      }
  }
  if (!live[d.initial]) return empty_dfa(d.domain);

  std::vector<State> remap(n, 0);
  Dfa out(d.domain);
  for (State s = 0; s < n; ++s)
    if (live[s]) remap[s] = out.add_state(d.finals[s] != 0);
  for (State s = 0; s < n; ++s)
    if (live[s])
      for (const auto& [x, t] : d.delta[s])
        if (live[t]) out.add_arc(remap[s], x, remap[t]);
  out.initial = remap[d.initial];
  return out;
}

namespace {

// BFS renumbering from the initial state following sorted arcs: canonical
// state order for a trimmed DFA.
Dfa renumber_bfs(const Dfa& d) {
  std::size_t n = d.num_states();
  std::vector<State> order;
  std::vector<State> remap(n, UINT32_MAX);
  std::deque<State> queue{d.initial};
  remap[d.initial] = 0;
  order.push_back(d.initial);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (const auto& [x, t] : d.delta[s])
      if (remap[t] == UINT32_MAX) {
        remap[t] = static_cast<State>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
  }
  Dfa out(d.domain);
  for (State s : order) out.add_state(d.finals[s] != 0);
  for (State s = 0; s < n; ++s) {
    if (remap[s] == UINT32_MAX) continue;
    for (const auto& [x, t] : d.delta[s]) out.add_arc(remap[s], x, remap[t]);
  }
  out.initial = 0;
  return out;
}

}  // namespace

Dfa minimize(const Dfa& d0, const Budget& budget) {
  Dfa d = trim(d0);
  std::size_t n = d.num_states();
  budget.charge(n, "minimization");
  // Moore refinement; a missing arc acts as an implicit dead block because
  // trimming removed every arc into dead territory.
  std::vector<std::size_t> block(n);
  for (State s = 0; s < n; ++s) block[s] = d.finals[s] ? 1 : 0;
  std::size_t blocks = 2;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::pair<Symbol, std::size_t>>>, std::size_t>
        sig_index;
    std::vector<std::size_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::pair<Symbol, std::size_t>> sig;
      sig.reserve(d.delta[s].size());
      for (const auto& [x, t] : d.delta[s]) sig.emplace_back(x, block[t]);
      auto key = std::make_pair(block[s], std::move(sig));
      auto [it, inserted] = sig_index.emplace(std::move(key), sig_index.size());
      next[s] = it->second;
    }
    blocks = sig_index.size();
    // Labels are assigned in first-encounter order, so a stable partition
    // reproduces itself exactly after one extra round.
    if (next == block) break;
    block = std::move(next);
  }

  Dfa out(d.domain);
  std::vector<State> rep(blocks, UINT32_MAX);
  for (State s = 0; s < n; ++s)
    if (rep[block[s]] == UINT32_MAX) rep[block[s]] = out.add_state(d.finals[s] != 0);
  for (State s = 0; s < n; ++s)
    for (const auto& [x, t] : d.delta[s]) out.add_arc(rep[block[s]], x, rep[block[t]]);
  out.initial = rep[block[d.initial]];
  return renumber_bfs(out);
}

Dfa intersect(const Dfa& a, const Dfa& b, const Budget& budget) {
  if (a.domain != b.domain) throw InvariantError("intersect over distinct domains");
  if (a.delta.empty() || b.delta.empty()) return empty_dfa(a.domain);
  Dfa out(a.domain);
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](State p, State q) {
    auto key = std::make_pair(p, q);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    State id = out.add_state(a.finals[p] && b.finals[q]);
    budget.charge(1, "product");
    index.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  intern(a.initial, b.initial);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State from = index[{p, q}];
    for (const auto& [x, t] : a.delta[p])
      if (auto u = b.step(q, x)) out.add_arc(from, x, intern(t, *u));
  }
  return trim(out);
}

Dfa difference(const Dfa& a, const Dfa& b, const Budget& budget) {
  if (a.domain != b.domain) throw InvariantError("difference over distinct domains");
  if (a.delta.empty()) return empty_dfa(a.domain);
  constexpr State kDead = UINT32_MAX;
  Dfa out(a.domain);
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](State p, State q) {
    auto key = std::make_pair(p, q);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    bool fin = a.finals[p] && (q == kDead || !b.finals[q]);
    State id = out.add_state(fin);
    budget.charge(1, "difference");
    index.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  State b0 = b.delta.empty() ? kDead : b.initial;
  intern(a.initial, b0);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State from = index[{p, q}];
    for (const auto& [x, t] : a.delta[p]) {
      State u = kDead;
      if (q != kDead)
        if (auto v = b.step(q, x)) u = *v;
      out.add_arc(from, x, intern(t, u));
    }
  }
  return trim(out);
}

Nfa union_nfa(const Dfa& a, const Dfa& b) {
  if (a.domain != b.domain) throw InvariantError("union over distinct domains");
  Nfa out(a.domain);
  State offset_a = 0;
  for (State s = 0; s < a.num_states(); ++s) out.add_state(a.finals[s] != 0);
  State offset_b = static_cast<State>(out.num_states());
  for (State s = 0; s < b.num_states(); ++s) out.add_state(b.finals[s] != 0);
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& [x, t] : a.delta[s]) out.add_arc(offset_a + s, x, offset_a + t);
  for (State s = 0; s < b.num_states(); ++s)
    for (const auto& [x, t] : b.delta[s]) out.add_arc(offset_b + s, x, offset_b + t);
  if (!a.delta.empty()) out.initials.push_back(offset_a + a.initial);
  if (!b.delta.empty()) out.initials.push_back(offset_b + b.initial);
  return out;
}

bool is_empty(const Dfa& d) {
  if (d.delta.empty()) return true;
  std::vector<char> seen(d.num_states(), 0);
  std::vector<State> todo{d.initial};
  seen[d.initial] = 1;
  while (!todo.empty()) {
    State s = todo.back();
    todo.pop_back();
    if (d.finals[s]) return false;
    for (const auto& [x, t] : d.delta[s])
      if (!seen[t]) {
        seen[t] = 1;
        todo.push_back(t);
      }
  }
  return true;
}

bool subset_of(const Dfa& a, const Dfa& b, const Budget& budget) {
  return is_empty(difference(a, b, budget));
}

bool equivalent(const Dfa& a, const Dfa& b, const Budget& budget) {
  return subset_of(a, b, budget) && subset_of(b, a, budget);
}

std::optional<Word> shortest_word(const Dfa& d) {
  if (d.delta.empty()) return std::nullopt;
  std::vector<std::pair<State, Symbol>> parent(d.num_states(), {UINT32_MAX, 0});
  std::vector<char> seen(d.num_states(), 0);
  std::deque<State> queue{d.initial};
  seen[d.initial] = 1;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (d.finals[s]) {
      Word w;
      for (State cur = s; parent[cur].first != UINT32_MAX; cur = parent[cur].first)
        w.push_back(parent[cur].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const auto& [x, t] : d.delta[s])
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = {s, x};
        queue.push_back(t);
      }
  }
  return std::nullopt;
}

std::vector<Word> enumerate_words(const Dfa& d, std::size_t max_len, std::size_t cap,
                                  bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<Word> out;
  if (d.delta.empty()) return out;
  // Distance to acceptance, for pruning.
  std::size_t n = d.num_states();
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (const auto& [x, t] : d.delta[s]) rev[t].push_back(s);
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s)
    if (d.finals[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : rev[s])
      if (dist[p] == SIZE_MAX) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
  }

  // Length-lex order: collect per length, symbols ascending.
  Word prefix;
  bool full = false;
  auto dfs = [&](auto&& self, State s, std::size_t remaining, std::size_t want) -> void {
    if (full || dist[s] == SIZE_MAX || dist[s] > remaining) return;
    if (prefix.size() == want) {
      if (d.finals[s]) {
        if (out.size() >= cap) {
          full = true;
          if (truncated) *truncated = true;
          return;
        }
        out.push_back(prefix);
      }
      return;
    }
    for (const auto& [x, t] : d.delta[s]) {
      prefix.push_back(x);
      self(self, t, remaining - 1, want);
      prefix.pop_back();
      if (full) return;
    }
  };
  for (std::size_t len = 0; len <= max_len && !full; ++len)
    dfs(dfs, d.initial, len, len);
  return out;
}

Dfa word_set_dfa(const Domain& dom, const std::vector<Word>& words) {
  Dfa trie(dom);
  trie.add_state(false);
  for (const Word& w : words) {
    State cur = 0;
    for (Symbol x : w) {
      if (auto next = trie.step(cur, x)) {
        cur = *next;
      } else {
        State fresh = trie.add_state(false);
        trie.add_arc(cur, x, fresh);
        cur = fresh;
      }
    }
    trie.finals[cur] = 1;
  }
  return minimize(trie);
}

Dfa universal_dfa(const Domain& dom) {
  Dfa out(dom);
  out.add_state(true);
  dom.for_each([&](Symbol x) { out.add_arc(0, x, 0); });
  return out;
}

Dfa empty_dfa(const Domain& dom) {
  Dfa out(dom);
  out.add_state(false);
  return out;
}

bool same_dfa(const Dfa& a, const Dfa& b) {
  return a.domain == b.domain && a.initial == b.initial && a.finals == b.finals &&
         a.delta == b.delta;
}

}  // namespace tracta
