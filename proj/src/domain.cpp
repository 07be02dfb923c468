#include "tracta/domain.hpp"

namespace tracta {

Domain Domain::tuple(Kind base, AlphabetRef a, int arity) {
  if (base != Kind::Letters && base != Kind::StepsNonEmpty)
    throw InvariantError("tuple base must be letters or nonempty steps");
  if (arity < 1) throw InvariantError("tuple arity must be positive");
  return Domain(Kind::Tuple, std::move(a), base, arity);
}

std::size_t Domain::base_count() const {
  switch (base_) {
    case Kind::Letters: return alpha_->size();
    case Kind::Steps: return alpha_->steps().size() + 1;
    default: return alpha_->steps().size();
  }
}

std::uint64_t Domain::size() const {
  if (kind_ != Kind::Tuple) return base_count();
  std::uint64_t r = radix(), n = 1;
  for (int i = 0; i < arity_; ++i) {
    if (n > UINT64_MAX / r) throw ResourceError("tuple domain too large to enumerate");
    n *= r;
  }
  return n - 1;  // all-pad column excluded
}

bool Domain::contains(Symbol s) const {
  switch (kind_) {
    case Kind::Letters: return s < alpha_->size();
    case Kind::Steps:
      return s == 0 || (s <= alpha_->all_mask() &&
                        alpha_->step_rank(static_cast<StepMask>(s)) >= 0);
    case Kind::StepsNonEmpty:
      return s != 0 && s <= alpha_->all_mask() &&
             alpha_->step_rank(static_cast<StepMask>(s)) >= 0;
    case Kind::Tuple: {
      if (s == 0) return false;
      std::uint64_t r = radix(), v = s;
      for (int i = 0; i < arity_; ++i) v /= r;
      return v == 0;  // every digit < radix is a valid rank or the pad
    }
  }
  return false;
}

Symbol Domain::base_of_rank(std::uint64_t r) const {
  switch (base_) {
    case Kind::Letters: return r;
    case Kind::Steps:
      return r == 0 ? 0 : static_cast<Symbol>(alpha_->steps()[r - 1]);
    default: return static_cast<Symbol>(alpha_->steps()[r]);
  }
}

std::uint64_t Domain::rank_of_base(Symbol s) const {
  switch (base_) {
    case Kind::Letters: return s;
    case Kind::Steps:
      return s == 0 ? 0
                    : static_cast<std::uint64_t>(
                          alpha_->step_rank(static_cast<StepMask>(s))) + 1;
    default: return static_cast<std::uint64_t>(alpha_->step_rank(static_cast<StepMask>(s)));
  }
}

Symbol Domain::pack(const std::vector<std::optional<Symbol>>& tracks) const {
  if (kind_ != Kind::Tuple) throw InvariantError("pack on non-tuple domain");
  if (static_cast<int>(tracks.size()) != arity_)
    throw InvariantError("pack arity mismatch");
  std::uint64_t r = radix();
  Symbol out = 0;
  bool some = false;
  for (const auto& t : tracks) {
    std::uint64_t digit = 0;
    if (t) {
      digit = rank_of_base(*t) + 1;
      some = true;
    }
    out = out * r + digit;
  }
  if (!some) throw InvariantError("all-pad column is not a symbol");
  return out;
}

std::vector<std::optional<Symbol>> Domain::unpack(Symbol s) const {
  if (kind_ != Kind::Tuple) throw InvariantError("unpack on non-tuple domain");
  std::uint64_t r = radix();
  std::vector<std::optional<Symbol>> out(static_cast<std::size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    std::uint64_t digit = s % r;
    s /= r;
    if (digit != 0) out[static_cast<std::size_t>(i)] = base_of_rank(digit - 1);
  }
  return out;
}

std::string Domain::name(Symbol s) const {
  switch (kind_) {
    case Kind::Letters: return alpha_->name(static_cast<Letter>(s));
    case Kind::Steps:
    case Kind::StepsNonEmpty:
      return alpha_->render_step(static_cast<StepMask>(s));
    case Kind::Tuple: {
      auto tracks = unpack(s);
      std::string out = "(";
      for (std::size_t i = 0; i < tracks.size(); ++i) {
        if (i) out += ",";
        if (!tracks[i]) {
          out += "#";
        } else if (base_ == Kind::Letters) {
          out += alpha_->name(static_cast<Letter>(*tracks[i]));
        } else {
          out += alpha_->render_step(static_cast<StepMask>(*tracks[i]));
        }
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace tracta
