#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triscord {

// Wrong shape or malformed argument (dimension mismatch, asymmetric input).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical breakdown: non-convergence, negative radicand beyond tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix has an eigenvalue below the positivity tolerance.
class NotAStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Matrix does not carry the symmetric X pattern; row/col name the first offending entry.
class NotSymmetricXStateError : public InvalidInputError {
 public:
  NotSymmetricXStateError(const std::string& what, std::size_t row, std::size_t col)
      : InvalidInputError(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace triscord
