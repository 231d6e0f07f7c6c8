#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupcheck {

// Base class for every error raised by this library.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction input has the wrong dimensions or out-of-range entries.
class BadShape : public GroupError {
 public:
  using GroupError::GroupError;
};

// Multiplication table fails a group axiom.
class NotAGroup : public GroupError {
 public:
  using GroupError::GroupError;
};

// A generator list entry is not a bijection on {0..n-1}.
class NotAPermutation : public GroupError {
 public:
  using GroupError::GroupError;
};

// Semidirect-product action is not an automorphism of the base group.
class BadAction : public GroupError {
 public:
  using GroupError::GroupError;
};

// Element set is not closed, lacks the identity, or belongs to another group.
class NotASubgroup : public GroupError {
 public:
  using GroupError::GroupError;
};

// Operation requires a normal subgroup.
class NotNormal : public GroupError {
 public:
  using GroupError::GroupError;
};

// Operation requires a full Sylow p-subgroup.
class NotSylow : public GroupError {
 public:
  using GroupError::GroupError;
};

// Operation requires a subgroup of prime-power order.
class NotPrimary : public GroupError {
 public:
  using GroupError::GroupError;
};

// Prime spectrum too large for exhaustive ordering search.
class TooManyPrimes : public GroupError {
 public:
  using GroupError::GroupError;
};

// A configured resource cap was hit before the computation finished.
class BudgetExceeded : public GroupError {
 public:
  BudgetExceeded(const std::string& what, std::int64_t cap, std::int64_t seen)
      : GroupError(what + " (cap " + std::to_string(cap) + ", needed " +
                   std::to_string(seen) + ")"),
        cap_(cap),
        seen_(seen) {}

  std::int64_t cap() const { return cap_; }
  std::int64_t seen() const { return seen_; }

 private:
  std::int64_t cap_;
  std::int64_t seen_;
};

// Text input for a group could not be parsed; positions are 1-based.
class ParseError : public GroupError {
 public:
  ParseError(const std::string& what, int line, int col)
      : GroupError("line " + std::to_string(line) + ", col " +
                   std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A conclusion that is guaranteed once its hypothesis holds failed on a
// concrete group. check_claim converts this into a failed verdict.
class TheoremViolation : public GroupError {
 public:
  using GroupError::GroupError;
};

// An internal cross-check failed; indicates a bug in this library.
class InternalCheckError : public GroupError {
 public:
  using GroupError::GroupError;
};

}  // namespace groupcheck
