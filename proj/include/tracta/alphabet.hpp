#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracta/error.hpp"

namespace tracta {

using Letter = std::uint8_t;
// Bit i set = letter i present. A step is valid when its letters are pairwise
// independent; the empty mask is the empty step.
using StepMask = std::uint16_t;

inline StepMask bit(Letter a) { return static_cast<StepMask>(StepMask{1} << a); }

// A finite alphabet with a reflexive, symmetric dependence relation.
// Immutable after construction; shared via AlphabetRef.
class DependenceAlphabet {
 public:
  static constexpr std::size_t kHardMaxLetters = 16;  // StepMask width

  // `independent` lists unordered pairs of letter names; dependence is the
  // complement plus the mandatory reflexive pairs.
  DependenceAlphabet(std::vector<std::string> letters,
                     const std::vector<std::pair<std::string, std::string>>& independent,
                     std::size_t max_letters = Limits::defaults().max_letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& name(Letter a) const { return letters_[a]; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;  // throws ParseError if unknown

  bool dependent(Letter a, Letter b) const { return dep_[a] & bit(b); }
  bool independent(Letter a, Letter b) const { return !dependent(a, b); }
  // Letters dependent on a (always includes a itself).
  StepMask dep_mask(Letter a) const { return dep_[a]; }

  StepMask all_mask() const { return static_cast<StepMask>((1u << size()) - 1); }

  // Union of dep_mask over the members of m.
  StepMask dependents_of(StepMask m) const;
  // Pairwise independent (∅ and singletons always are).
  bool valid_step(StepMask m) const { return rank_[m] != 0 || m == 0; }
  // Every letter of a independent of every letter of b (implies disjoint).
  bool indep(StepMask a, StepMask b) const { return (dependents_of(a) & b) == 0; }
  // Foata chaining a ▷ b: every letter of b depends on some letter of a.
  bool chained(StepMask a, StepMask b) const { return (b & ~dependents_of(a)) == 0; }

  // Valid nonempty steps in ascending mask order.
  const std::vector<StepMask>& steps() const { return steps_; }
  // Index into steps(), or -1 when m is not a valid nonempty step.
  int step_rank(StepMask m) const { return rank_[m] - 1; }

  // Greedy longest-match tokenization; whitespace between tokens is skipped.
  std::vector<Letter> parse_word(std::string_view text) const;
  std::string render_word(const std::vector<Letter>& w) const;
  std::string render_step(StepMask m) const;  // "{a,c}"

  // Unordered independent pairs (a < b), for serialization.
  std::vector<std::pair<Letter, Letter>> independent_pairs() const;

  bool operator==(const DependenceAlphabet& o) const {
    return letters_ == o.letters_ && dep_ == o.dep_;
  }

 private:
  std::vector<std::string> letters_;
  std::vector<StepMask> dep_;    // per letter
  std::vector<StepMask> steps_;  // valid nonempty masks, ascending
  std::vector<int> rank_;        // mask -> rank+1; 0 = invalid
};

using AlphabetRef = std::shared_ptr<const DependenceAlphabet>;

AlphabetRef make_alphabet(std::vector<std::string> letters,
                          const std::vector<std::pair<std::string, std::string>>& independent = {},
                          std::size_t max_letters = Limits::defaults().max_letters);

// True when the two refs denote the same alphabet (pointer or value equality).
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

// Iterate over the set bits of a mask.
template <class F>
void for_each_letter(StepMask m, F f) {
  while (m) {
    Letter a = static_cast<Letter>(__builtin_ctz(m));
    f(a);
    m = static_cast<StepMask>(m & (m - 1));
  }
}

inline int popcount(StepMask m) { return __builtin_popcount(m); }

}  // namespace tracta
