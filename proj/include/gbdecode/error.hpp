#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbdecode {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: a precondition on arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text (polynomials, formula files, code specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A Gröbner basis computation hit its configured pair limit.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::string trace)
      : Error(what), trace_(std::move(trace)) {}

  /// Line-oriented summary of the progress made before giving up.
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

/// A formula file that was precomputed for a different code.
class ArtifactMismatch : public Error {
 public:
  using Error::Error;
};

/// A structural property that the algebra guarantees did not hold.
/// Never patched over: it signals a wrong ordering or a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbdecode
