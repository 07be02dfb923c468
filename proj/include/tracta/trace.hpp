#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracta/alphabet.hpp"

namespace tracta {

// Foata normal form of a trace: a ▷-chained sequence of nonempty steps.
// This is the canonical representative, so FoataWord equality is trace
// equality.
class FoataWord {
 public:
  explicit FoataWord(AlphabetRef alpha) : alpha_(std::move(alpha)) {}
  // Validates: every step valid and nonempty, consecutive steps ▷-chained.
  FoataWord(AlphabetRef alpha, std::vector<StepMask> steps);

  const AlphabetRef& alphabet() const { return alpha_; }
  const std::vector<StepMask>& steps() const { return steps_; }
  std::size_t step_count() const { return steps_.size(); }
  std::size_t letter_count() const;
  bool empty() const { return steps_.empty(); }

  // Letters of each step in ascending order, steps in sequence.
  std::vector<Letter> linearization() const;
  std::string render() const;  // "{a,c}{b,d}" ; "ε" when empty

  bool operator==(const FoataWord& o) const {
    return steps_ == o.steps_ && same_alphabet(alpha_, o.alpha_);
  }
  bool operator!=(const FoataWord& o) const { return !(*this == o); }
  // Total order for use in ordered containers: by step sequence.
  bool operator<(const FoataWord& o) const { return steps_ < o.steps_; }

 private:
  AlphabetRef alpha_;
  std::vector<StepMask> steps_;
};

// Level algorithm: occurrence level = 1 + max level of earlier dependent
// occurrences; step k collects the level-k occurrences.
FoataWord foata_normalize(const AlphabetRef& alpha, const std::vector<Letter>& word);
FoataWord foata_normalize(const AlphabetRef& alpha, std::string_view text);

bool trace_equiv(const AlphabetRef& alpha, const std::vector<Letter>& u,
                 const std::vector<Letter>& v);

FoataWord concat(const FoataWord& s, const FoataWord& t);

// The quotient [prefix]⁻¹[whole], or nullopt when prefix is not a trace
// prefix of whole.
std::optional<FoataWord> left_divide(const FoataWord& prefix, const FoataWord& whole);
bool prefix_le(const FoataWord& prefix, const FoataWord& whole);

// Letters occurring at maximal positions of the dependence order
// (i E j iff i < j and a_i D a_j over any linearization).
StepMask maximal_letters(const FoataWord& t);
// Exactly one maximal element.
bool is_prime(const FoataWord& t);

}  // namespace tracta
