#pragma once

#include <variant>

#include "orthocurrent/liealg.hpp"

namespace orthocurrent {

/// F[X]/(X^2 - D) on the basis {1, x}. Throws ZeroDiscriminant for D = 0.
CoefficientAlgebra quadratic_quotient(const FieldElement& d);

/// D = e^2 with char != 2: A is F x F via the idempotents
/// e+ = (1 + x/e)/2 and e- = (1 - x/e)/2.
struct SplitQuotient {
  FieldElement root;
  Vector e_plus;
  Vector e_minus;
};

/// D = e^2 with char 2: A is local and n = x + e squares to zero.
struct LocalQuotient {
  FieldElement root;
  Vector nilpotent;
};

/// D is not a square: A is the field F[sqrt D].
struct FieldQuotient {
  Field extension;
};

struct QuadraticAnalysis {
  CoefficientAlgebra algebra;
  std::variant<SplitQuotient, LocalQuotient, FieldQuotient> kind;
};

QuadraticAnalysis analyze_quadratic(const FieldElement& d);

/// Re-checks the witnesses exactly: idempotent identities, nilpotency, or
/// non-squareness of D.
bool verify_analysis(const QuadraticAnalysis& analysis);

}  // namespace orthocurrent
