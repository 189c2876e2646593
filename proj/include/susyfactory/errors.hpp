#ifndef SUSYFACTORY_ERRORS_HPP
#define SUSYFACTORY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace susy {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user input: parse failures, unbound parameters, bad configs.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class UnboundParameter : public InputError {
 public:
  using InputError::InputError;
};

class EvalDomainError : public Error {
 public:
  using Error::Error;
};

// Expression not representable as monomials in x, 1/x, |x|, sign(x).
class NonMonomial : public InputError {
 public:
  using InputError::InputError;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class EvenProductViolation : public InputError {
 public:
  using InputError::InputError;
};

class RadicandNonpositive : public Error {
 public:
  using Error::Error;
};

class NotQuadraticForm : public Error {
 public:
  using Error::Error;
};

class PoleInCoefficient : public InputError {
 public:
  using InputError::InputError;
};

class PoleOnGrid : public InputError {
 public:
  using InputError::InputError;
};

class ThetaOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class QuadratureBreakdown : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InsufficientConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace susy

#endif  // SUSYFACTORY_ERRORS_HPP
