#pragma once

#include <stdexcept>
#include <string>

namespace dmsvp {

/// Broad failure classes. The CLI maps these onto its exit codes.
enum class ErrorKind {
  kParse,          // malformed input text
  kPrecondition,   // dimension, rank, singularity, threshold, boundedness, domain
  kBudget,         // enumeration limit exceeded
  kInvariant,      // an internal guarantee did not hold (bug or false claim)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::kPrecondition, what) {}
};

class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RankDeficientError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMatrixError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised when `n` is below the threshold g(Delta) + 1 required by the solver.
class ThresholdError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnboundedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptyPolyhedronError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ContainmentError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EnumerationLimitError : public Error {
 public:
  explicit EnumerationLimitError(const std::string& what) : Error(ErrorKind::kBudget, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::kInvariant, what) {}
};

}  // namespace dmsvp
