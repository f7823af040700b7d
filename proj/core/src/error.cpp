#include "orthocurrent/error.hpp"

namespace orthocurrent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::AlternatingChar2: return "AlternatingChar2";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::NotLieAlgebra: return "NotLieAlgebra";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::NondegenerateWRequired: return "NondegenerateWRequired";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

}  // namespace orthocurrent
