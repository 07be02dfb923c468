#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracta {

// Error kinds map one-to-one onto CLI exit codes.
enum class ErrorKind : int { Parse = 1, Invariant = 2, Resource = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::string msg) : Error(ErrorKind::Parse, std::move(msg)) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(std::string msg) : Error(ErrorKind::Invariant, std::move(msg)) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(std::string msg) : Error(ErrorKind::Resource, std::move(msg)) {}
};

// Tunable resource caps. Defaults come from the environment
// (TRACTA_STATE_BUDGET, TRACTA_MAX_LETTERS) the first time they are read.
struct Limits {
  std::size_t state_budget = 1000000;
  std::size_t max_letters = 10;

  static const Limits& defaults();
};

// Counts states allocated by one automaton construction; throws ResourceError
// past the cap so runaway products die before exhausting memory.
class Budget {
 public:
  Budget() : cap_(Limits::defaults().state_budget) {}
  explicit Budget(std::size_t cap) : cap_(cap) {}

  std::size_t cap() const { return cap_; }

  void charge(std::size_t n, const char* what) const {
    used_ += n;
    if (used_ > cap_)
      throw ResourceError(std::string("state budget of ") + std::to_string(cap_) +
                          " exceeded while building " + what);
  }
  void reset() const { used_ = 0; }
  std::size_t used() const { return used_; }

 private:
  std::size_t cap_;
  mutable std::size_t used_ = 0;
};

}  // namespace tracta
