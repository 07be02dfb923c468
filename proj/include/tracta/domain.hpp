#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracta/alphabet.hpp"

namespace tracta {

using Symbol = std::uint64_t;

// Symbol universes automata range over.
//  - Letters: symbol = letter index.
//  - Steps / StepsNonEmpty: symbol = step mask (pairwise independent letters);
//    Steps admits the empty mask.
//  - Tuple: k synchronized tracks of a base domain, each track either a base
//    symbol or the pad '#'; the all-pad column is excluded. Encoding is mixed
//    radix with digit 0 = '#' and digit r = base symbol of rank r-1, track 0
//    most significant, so symbol order is the positional order on columns.
class Domain {
 public:
  enum class Kind { Letters, Steps, StepsNonEmpty, Tuple };

  static Domain letters(AlphabetRef a) { return Domain(Kind::Letters, std::move(a), Kind::Letters, 1); }
  static Domain steps(AlphabetRef a) { return Domain(Kind::Steps, std::move(a), Kind::Steps, 1); }
  static Domain steps_nonempty(AlphabetRef a) {
    return Domain(Kind::StepsNonEmpty, std::move(a), Kind::StepsNonEmpty, 1);
  }
  static Domain tuple(Kind base, AlphabetRef a, int arity);

  Kind kind() const { return kind_; }
  Kind base() const { return base_; }
  int arity() const { return arity_; }
  const AlphabetRef& alphabet() const { return alpha_; }

  std::size_t base_count() const;
  std::uint64_t radix() const { return base_count() + 1; }

  bool contains(Symbol s) const;
  std::string name(Symbol s) const;

  // Number of valid symbols; throws ResourceError when it cannot be computed
  // without overflow.
  std::uint64_t size() const;

  // Tuple packing. nullopt = '#'. Requires kind() == Tuple.
  Symbol pack(const std::vector<std::optional<Symbol>>& tracks) const;
  std::vector<std::optional<Symbol>> unpack(Symbol s) const;

  Symbol base_of_rank(std::uint64_t r) const;
  std::uint64_t rank_of_base(Symbol s) const;
  Domain base_domain() const { return Domain(base_, alpha_, base_, 1); }

  // Enumerate all valid symbols in ascending order. Safe for base domains;
  // tuple domains iterate radix^arity candidates, so keep them small.
  template <class F>
  void for_each(F f) const {
    if (kind_ == Kind::Letters) {
      for (Symbol s = 0; s < alpha_->size(); ++s) f(s);
    } else if (kind_ == Kind::Steps) {
      f(Symbol{0});
      for (StepMask m : alpha_->steps()) f(static_cast<Symbol>(m));
    } else if (kind_ == Kind::StepsNonEmpty) {
      for (StepMask m : alpha_->steps()) f(static_cast<Symbol>(m));
    } else {
      std::uint64_t n = size();
      for (Symbol s = 1; s <= n; ++s) f(s);
    }
  }

  bool operator==(const Domain& o) const {
    return kind_ == o.kind_ && base_ == o.base_ && arity_ == o.arity_ &&
           same_alphabet(alpha_, o.alpha_);
  }
  bool operator!=(const Domain& o) const { return !(*this == o); }

 private:
  Domain(Kind k, AlphabetRef a, Kind base, int arity)
      : kind_(k), alpha_(std::move(a)), base_(base), arity_(arity) {}

  Kind kind_;
  AlphabetRef alpha_;
  Kind base_;
  int arity_;
};

}  // namespace tracta
