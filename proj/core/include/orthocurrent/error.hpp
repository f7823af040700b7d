#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthocurrent {

enum class ErrorKind {
  Syntax,
  Domain,
  DivisionByZero,
  ShapeMismatch,
  DescriptorMismatch,
  NotPrime,
  NotSymmetric,
  Degenerate,
  AlternatingChar2,
  ZeroEntry,
  NotClosed,
  NotIndependent,
  NotLieAlgebra,
  WrongDimension,
  ZeroDiscriminant,
  NotPerfect,
  UnsupportedPrime,
  UnsupportedField,
  NondegenerateWRequired,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orthocurrent
