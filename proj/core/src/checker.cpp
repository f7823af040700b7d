// Independent re-verification of decomposition certificates. Only
// elementary operations are used here (brackets, spans, containment); the
// classification path is never consulted.

#include "orthocurrent/structure.hpp"

namespace orthocurrent {

namespace {

bool perfect_subalgebra(const LieAlgebra& m, const Subspace& s) {
  return s.dim() > 0 && bracket_span(m, s, s) == s;
}

bool solvable_subspace(const LieAlgebra& m, const Subspace& s) {
  Subspace current = s;
  for (std::size_t step = 0; step <= m.dim(); ++step) {
    if (current.dim() == 0) return true;
    Subspace next = bracket_span(m, current, current);
    if (next == current) return false;
    current = std::move(next);
  }
  return current.dim() == 0;
}

void check_two_ideals(const LieAlgebra& m, const TwoSimpleIdeals& w, const DecompositionCertificate& cert,
                      std::vector<Check>& out) {
  const Subspace full = Subspace::full(m.field(), m.dim());
  auto mj = subspace_meet_join(w.first, w.second);
  out.push_back({"char_not_2", cert.field.characteristic() != 2});
  out.push_back({"D_is_square", is_square(cert.discriminant).has_value()});
  out.push_back({"I1_dim_3", w.first.dim() == 3});
  out.push_back({"I2_dim_3", w.second.dim() == 3});
  out.push_back({"I1_is_ideal", is_ideal(m, w.first)});
  out.push_back({"I2_is_ideal", is_ideal(m, w.second)});
  out.push_back({"I1_meet_I2_zero", mj.intersection.dim() == 0});
  out.push_back({"I1_join_I2_is_M", mj.sum == full});
  // Perfect of dimension 3 means simple as a Lie algebra; an ideal of a
  // direct summand is an ideal of M, so each summand is a simple ideal.
  out.push_back({"I1_perfect", perfect_subalgebra(m, w.first)});
  out.push_back({"I2_perfect", perfect_subalgebra(m, w.second)});
}

void check_semidirect(const LieAlgebra& m, const SemidirectNR& w, const DecompositionCertificate& cert,
                      std::vector<Check>& out) {
  const Subspace full = Subspace::full(m.field(), m.dim());
  auto mj = subspace_meet_join(w.n, w.r);
  out.push_back({"char_2", cert.field.characteristic() == 2});
  out.push_back({"D_is_square", is_square(cert.discriminant).has_value()});
  out.push_back({"N_dim_3", w.n.dim() == 3});
  out.push_back({"N_is_subalgebra", is_subalgebra(m, w.n)});
  out.push_back({"N_perfect", perfect_subalgebra(m, w.n)});
  out.push_back({"R_dim_3", w.r.dim() == 3});
  out.push_back({"R_is_ideal", is_ideal(m, w.r)});
  out.push_back({"R_abelian", bracket_span(m, w.r, w.r).dim() == 0});
  out.push_back({"R_solvable", solvable_subspace(m, w.r)});
  out.push_back({"N_bracket_R_in_R", w.r.contains(bracket_span(m, w.n, w.r))});
  out.push_back({"N_meet_R_zero", mj.intersection.dim() == 0});
  out.push_back({"N_join_R_is_M", mj.sum == full});
  // M/R is isomorphic to the simple N, so every solvable ideal lies in R.
  bool radical = false;
  if (is_ideal(m, w.r)) {
    LieAlgebra q = quotient_algebra(m, w.r);
    radical = q.dim() == 3 && is_simple_3dim(q);
  }
  out.push_back({"R_is_solvable_radical", radical});
}

void check_descent(const OrthogonalAlgebra& alg, const SimpleByDescent& w, const DecompositionCertificate& cert,
                   std::vector<Check>& out) {
  const Field& k = w.descent.extension;
  out.push_back({"D_not_square", !is_square(cert.discriminant).has_value()});
  out.push_back({"K_is_F_sqrt_D", k.kind() == FieldKind::QuadraticExtension && k.base() == cert.field &&
                                      k.radicand() == cert.discriminant});
  bool base_change_ok = false;
  bool theorem_ok = false;
  try {
    base_change_ok = w.descent.table == base_change(w.w_table, k);
    LieAlgebra current = tensor_current(LieAlgebra(w.w_table), quadratic_quotient(cert.discriminant));
    theorem_ok = explicit_table(alg, cert.form) == current.constants();
  } catch (const Error&) {
  }
  out.push_back({"K_table_is_base_change", base_change_ok});
  out.push_back({"M_table_equals_current_table", theorem_ok});
  for (auto& c : check_simplicity_certificate(w.descent)) out.push_back({"descent_" + c.name, c.ok});
}

}  // namespace

std::vector<Check> check_certificate(const DecompositionCertificate& cert) {
  std::vector<Check> out;
  const FieldElement d = cert.form[0] * cert.form[1] * cert.form[2] * cert.form[3];
  out.push_back({"D_is_product_of_entries", d == cert.discriminant});
  const OrthogonalAlgebra alg = build_orthogonal_algebra(cert.field, cert.form);
  out.push_back({"M_dim_6", alg.m.dim() == 6});
  if (const auto* w = std::get_if<TwoSimpleIdeals>(&cert.evidence)) {
    check_two_ideals(alg.m, *w, cert, out);
  } else if (const auto* w = std::get_if<SemidirectNR>(&cert.evidence)) {
    check_semidirect(alg.m, *w, cert, out);
  } else {
    check_descent(alg, std::get<SimpleByDescent>(cert.evidence), cert, out);
  }
  return out;
}

}  // namespace orthocurrent
