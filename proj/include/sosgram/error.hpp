#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sosgram/rational.hpp"

namespace sosgram {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dimensionally inconsistent input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold for otherwise well-formed input.
///
/// Carries a rational witness whenever one exists: a vector w with wᵀQw < 0
/// for psd failures, or a point x with p(x) < 0 for nonnegativity failures.
class PreconditionError : public Error {
 public:
  enum class WitnessKind { none, quadratic_form_vector, evaluation_point };

  PreconditionError(const std::string& what, WitnessKind kind,
                    std::vector<Rational> witness, Rational witness_value)
      : Error(what),
        kind_(kind),
        witness_(std::move(witness)),
        witness_value_(std::move(witness_value)) {}

  explicit PreconditionError(const std::string& what)
      : Error(what), kind_(WitnessKind::none) {}

  WitnessKind witness_kind() const { return kind_; }
  const std::vector<Rational>& witness() const { return witness_; }
  const Rational& witness_value() const { return witness_value_; }

 private:
  WitnessKind kind_;
  std::vector<Rational> witness_;
  Rational witness_value_;
};

/// Floating-point root pairing could not produce an exactly verified Gram
/// matrix. The input may still be a sum of squares.
class NumericFailure : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An invariant that the library guarantees was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sosgram
