#ifndef LIEBIDER_ERRORS_HPP
#define LIEBIDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liebider {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad documents, shape mismatches,
// unknown names. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class IndexError : public InputError {
 public:
  using InputError::InputError;
};

class DimMismatch : public InputError {
 public:
  using InputError::InputError;
};

class AmbientMismatch : public InputError {
 public:
  using InputError::InputError;
};

class UnknownName : public InputError {
 public:
  using InputError::InputError;
};

class FactorMismatch : public InputError {
 public:
  using InputError::InputError;
};

class JacobiError : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical precondition does not hold for a well-formed input.
// The CLI maps these to exit code 1.
class MathError : public Error {
 public:
  using Error::Error;
};

class NotComplete : public MathError {
 public:
  using MathError::MathError;
};

class NotBiderivation : public MathError {
 public:
  using MathError::MathError;
};

class NotInner : public MathError {
 public:
  using MathError::MathError;
};

class CenterNonzero : public MathError {
 public:
  using MathError::MathError;
};

class NotTwoStep : public MathError {
 public:
  using MathError::MathError;
};

// A computed result failed its own verification. Never expected.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace liebider

#endif  // LIEBIDER_ERRORS_HPP
