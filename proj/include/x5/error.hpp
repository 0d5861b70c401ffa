#pragma once

#include <stdexcept>
#include <string>

namespace x5 {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition or constructor invariant.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Enumeration refused: the signature exceeds the configured atom guard.
class SignatureTooLarge : public Error {
public:
  SignatureTooLarge(std::size_t atoms, std::size_t limit)
      : Error("signature too large: " + std::to_string(atoms) + " atoms (limit " +
              std::to_string(limit) + ")"),
        atoms_(atoms),
        limit_(limit) {}
  std::size_t atoms() const noexcept { return atoms_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t atoms_;
  std::size_t limit_;
};

/// A rewrite exceeded its node budget.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

class TransformError : public Error {
public:
  using Error::Error;
};

/// A discriminating context was requested for weakly equivalent formulas.
class EquivalentFormulas : public Error {
public:
  using Error::Error;
};

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
        message_(message),
        span_(span) {}
  const std::string& message() const noexcept { return message_; }
  const SourceSpan& span() const noexcept { return span_; }

private:
  std::string message_;
  SourceSpan span_;
};

}  // namespace x5
