#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis family that does not describe a matroid.
class InvalidMatroid : public Error {
 public:
  enum class Kind { empty_family, element_out_of_range, arity_mismatch, exchange_failure, size_cap };

  InvalidMatroid(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Malformed MATROID v1 / HYPERGRAPH v1 / JSON input.
class ParseError : public Error {
 public:
  enum class Kind { malformed_header, malformed_line, index_out_of_range, arity_mismatch, exchange_failure, empty_bases };

  ParseError(Kind kind, int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// A search or construction would exceed its node, size, or memory budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed certificate contradicts a proven statement. Never expected to fire.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace turan
