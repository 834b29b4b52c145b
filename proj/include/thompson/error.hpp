#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tree, diagram, word, point or PD text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arity mismatch between trees, diagrams or operations.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Index or argument outside of its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its documented budget (e.g. the state-sum crossing limit).
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Two routes of the pipeline disagree, or a structural invariant broke. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace thompson
