#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "internal inconsistency" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedLabel : public Error {
 public:
  explicit UnsupportedLabel(int m)
      : Error("unsupported Coxeter label m = " + std::to_string(m) +
              " (supported: 2..6 and inf)"),
        label_(m) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in field arithmetic") {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotFiniteType : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidRoot : public Error {
 public:
  using Error::Error;
};

// Something that cannot happen for genuine group elements / roots happened.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class MoveUnavailable : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeter
