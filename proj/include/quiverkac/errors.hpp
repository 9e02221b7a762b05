#pragma once

#include <stdexcept>
#include <string>

namespace quiverkac {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something malformed: bad file, mismatched lengths,
// loops where they are not allowed, a non-prime modulus.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant the formulas guarantee did not hold. These
// indicate a bug or an insufficient truncation, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(int line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class LengthMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class LoopNotAllowed : public UsageError {
 public:
  using UsageError::UsageError;
};

class BoundMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class CharacteristicTooSmall : public UsageError {
 public:
  using UsageError::UsageError;
};

class SearchSpaceTooLarge : public UsageError {
 public:
  using UsageError::UsageError;
};

class ZeroConstantTerm : public UsageError {
 public:
  using UsageError::UsageError;
};

class PoleAtPoint : public UsageError {
 public:
  using UsageError::UsageError;
};

class NonPolynomial : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NonIntegral : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NonIntegerMultiplicity : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NegativeOrNonIntegerMultiplicity : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class InternalNonInteger : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace quiverkac
