#pragma once

#include <stdexcept>
#include <string>

namespace multideg {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Validation,        // malformed or inconsistent input
  Isobaric,          // rows do not share a weighted degree
  NonSquare,         // square exponent matrix required
  NotWellPresented,  // characteristic-polynomial route inapplicable
  DivisionByZero,    // substitution annihilated a denominator factor
  MethodInapplicable,
  InvariantBreach,   // internal consistency check failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& m) : Error(ErrorKind::Validation, m) {}
};

class IsobaricError : public Error {
 public:
  explicit IsobaricError(const std::string& m) : Error(ErrorKind::Isobaric, m) {}
};

class NonSquareError : public Error {
 public:
  explicit NonSquareError(const std::string& m) : Error(ErrorKind::NonSquare, m) {}
};

class NotWellPresented : public Error {
 public:
  explicit NotWellPresented(const std::string& m) : Error(ErrorKind::NotWellPresented, m) {}
};

class DivisionByZeroForm : public Error {
 public:
  explicit DivisionByZeroForm(const std::string& m) : Error(ErrorKind::DivisionByZero, m) {}
};

class MethodInapplicable : public Error {
 public:
  explicit MethodInapplicable(const std::string& m) : Error(ErrorKind::MethodInapplicable, m) {}
};

class InvariantBreach : public Error {
 public:
  explicit InvariantBreach(const std::string& m) : Error(ErrorKind::InvariantBreach, m) {}
};

}  // namespace multideg
