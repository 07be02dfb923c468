#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tracta/alphabet.hpp"
#include "tracta/trace.hpp"

namespace th {

using namespace tracta;

// a,b,c,d with aIc, bId, cId (the running four-letter example).
inline AlphabetRef ex1() {
  return make_alphabet({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}, {"c", "d"}});
}

inline AlphabetRef ab_indep() { return make_alphabet({"a", "b"}, {{"a", "b"}}); }
inline AlphabetRef ab_dep() { return make_alphabet({"a", "b"}); }

// a,b,c with aDb, bDc, aIc — the merge soundness regression alphabet.
inline AlphabetRef abc_chain() { return make_alphabet({"a", "b", "c"}, {{"a", "c"}}); }

// All distinct letters independent (free commutative monoid).
inline AlphabetRef free_comm(std::size_t n) {
  std::vector<std::string> ls;
  std::vector<std::pair<std::string, std::string>> ind;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ind.push_back({ls[i], ls[j]});
  return make_alphabet(ls, ind);
}

inline AlphabetRef random_alphabet(std::mt19937_64& rng, std::size_t max_letters = 5) {
  std::size_t n = 1 + rng() % max_letters;
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> ind;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2) ind.push_back({ls[i], ls[j]});
  return make_alphabet(ls, ind);
}

inline std::vector<Letter> random_word(std::mt19937_64& rng, const AlphabetRef& al,
                                       std::size_t len) {
  std::vector<Letter> w(len);
  for (auto& a : w) a = static_cast<Letter>(rng() % al->size());
  return w;
}

// Full trace-equivalence class by BFS over adjacent independent swaps.
inline std::set<std::vector<Letter>> equiv_class(const AlphabetRef& al,
                                                 const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> seen{w};
  std::vector<std::vector<Letter>> todo{w};
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (al->independent(u[i], u[i + 1])) {
        auto v = u;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) todo.push_back(v);
      }
    }
  }
  return seen;
}

// Number of maximal positions of the dependence order, built by brute force.
inline int count_maximal_positions(const AlphabetRef& al, const std::vector<Letter>& w) {
  int count = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool maximal = true;
    for (std::size_t k = j + 1; k < w.size(); ++k)
      if (al->dependent(w[j], w[k])) maximal = false;
    if (maximal) ++count;
  }
  return count;
}

// All traces with at most n letters, as Foata words (deduplicated).
inline std::vector<FoataWord> all_traces_up_to(const AlphabetRef& al, std::size_t n) {
  std::set<FoataWord> out;
  std::vector<std::vector<Letter>> layer{{}};
  out.insert(FoataWord(al));
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (Letter a = 0; a < al->size(); ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
        out.insert(foata_normalize(al, v));
      }
    layer = std::move(next);
  }
  return {out.begin(), out.end()};
}

}  // namespace th
