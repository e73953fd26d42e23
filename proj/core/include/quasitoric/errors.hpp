#pragma once

#include <stdexcept>
#include <string>

namespace quasitoric {

// Base of every error raised by the library. Callers that only need to know
// "something in quasitoric rejected the input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text given to one of the parsers.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Division by zero, off-sphere samples, points outside U(T*), ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two irrational scalars from different fields Q(sqrt(d)) were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

// A constraint system with no solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A nonempty region that contains a line (no vertex).
class NotPointedError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but asks for something this library does not do.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasitoric
