#include "orthocurrent/coeff_algebra.hpp"

namespace orthocurrent {

CoefficientAlgebra quadratic_quotient(const FieldElement& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDiscriminant, "X^2 - D needs D != 0");
  return CoefficientAlgebra::pure_power_quotient(d, 2);
}

QuadraticAnalysis analyze_quadratic(const FieldElement& d) {
  CoefficientAlgebra a = quadratic_quotient(d);
  const Field& f = d.field();
  auto root = is_square(d);
  if (!root) return {std::move(a), FieldQuotient{Field::quadratic_extension(f, d)}};
  if (f.characteristic() == 2) {
    return {std::move(a), LocalQuotient{*root, Vector{*root, f.one()}}};
  }
  FieldElement half = f.from_int(2).inv();
  FieldElement slope = half / *root;
  return {std::move(a), SplitQuotient{*root, Vector{half, slope}, Vector{half, -slope}}};
}

bool verify_analysis(const QuadraticAnalysis& analysis) {
  const auto& a = analysis.algebra;
  const Field& f = a.field();
  const FieldElement& d = a.defining_constant();
  const Vector zero = zero_vector(f, 2);
  if (const auto* s = std::get_if<SplitQuotient>(&analysis.kind)) {
    if (!(s->root * s->root == d)) return false;
    const auto& ep = s->e_plus;
    const auto& em = s->e_minus;
    if (!(a.multiply(ep, ep) == ep) || !(a.multiply(em, em) == em)) return false;
    if (!(a.multiply(ep, em) == zero) || !(ep + em == a.one())) return false;
    // The projections x |-> e and x |-> -e are algebra maps A -> F, and they
    // separate the idempotents, so A is F x F.
    const FieldElement roots[2] = {s->root, -s->root};
    for (std::size_t side = 0; side < 2; ++side) {
      auto project = [&](const Vector& v) { return v[0] + v[1] * roots[side]; };
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          Vector ei = unit_vector(f, 2, i), ej = unit_vector(f, 2, j);
          if (!(project(a.multiply(ei, ej)) == project(ei) * project(ej))) return false;
        }
      }
      if (!(project(side == 0 ? ep : em).is_one()) || !project(side == 0 ? em : ep).is_zero()) return false;
    }
    return true;
  }
  if (const auto* l = std::get_if<LocalQuotient>(&analysis.kind)) {
    return f.characteristic() == 2 && l->root * l->root == d && !is_zero(l->nilpotent) &&
           a.multiply(l->nilpotent, l->nilpotent) == zero;
  }
  const auto& q = std::get<FieldQuotient>(analysis.kind);
  return !is_square(d).has_value() && q.extension.kind() == FieldKind::QuadraticExtension &&
         q.extension.base() == f && q.extension.radicand() == d;
}

}  // namespace orthocurrent
