#include "orthocurrent/structure.hpp"

#include <random>

namespace orthocurrent {

bool all_ok(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::string_view case_name(CertificateCase c) {
  switch (c) {
    case CertificateCase::TwoSimpleIdeals:
      return "two_simple_ideals";
    case CertificateCase::SemidirectNR:
      return "semidirect_N_R";
    case CertificateCase::SimpleByDescent:
      return "simple_by_descent";
  }
  return "unknown";
}

namespace {

void require_nonzero(const DiagonalEntries& e) {
  for (const auto& x : e) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroEntry, "diagonal entries must be nonzero");
  }
}

FieldElement product(const DiagonalEntries& e) { return e[0] * e[1] * e[2] * e[3]; }

// x' acts on coordinates relative to the rows of `change`; returns the same
// operator in the original coordinates: P^T x' P^{-T}.
Matrix to_original(const Matrix& x, const Matrix& change_t, const Matrix& change_t_inv) {
  return change_t * x * change_t_inv;
}

std::vector<Vector> coordinates_in(const LieAlgebra& l, const std::vector<Matrix>& mats) {
  std::vector<Vector> out;
  out.reserve(mats.size());
  for (const auto& x : mats) {
    auto c = l.coordinates_of(x);
    if (!c) throw Error(ErrorKind::NotClosed, "explicit basis element " + x.to_string() + " lies outside the algebra");
    out.push_back(std::move(*c));
  }
  return out;
}

TheoremTrial run_trial(const OrthogonalAlgebra& alg, const Subspace& w, const FieldElement& d) {
  const Field& field = alg.form.field();
  const BilinearForm fw = restrict(alg.form, w);
  if (!fw.nondegenerate()) throw Error(ErrorKind::NondegenerateWRequired, "restriction to W is degenerate");

  // Orthogonal basis of W, completed by the line W^perp.
  const OrthogonalBasisResult ow = orthogonalize(fw);
  const Matrix rows_w = ow.change * w.basis();
  const Subspace perp = kernel(rows_w * alg.form.gram());
  if (perp.dim() != 1) throw Error(ErrorKind::NondegenerateWRequired, "W^perp is not a line");
  std::vector<Vector> rows = rows_w.row_vectors();
  rows.push_back(perp.basis().row(0));
  const Matrix change = Matrix::from_rows(field, rows, 4);
  const FieldElement delta = determinant(change);
  const FieldElement d4 = alg.form.evaluate(rows[3], rows[3]);
  DiagonalEntries diag{ow.diagonal[0], ow.diagonal[1], ow.diagonal[2], d4};

  const Matrix pt = change.transpose();
  const Matrix pt_inv = *inverse(pt);
  const ExplicitBasis pb = explicit_basis(diag[0], diag[1], diag[2], diag[3]);
  const FieldElement delta_inv = delta.inv();
  std::vector<Matrix> transported;
  for (std::size_t i = 0; i < 6; ++i) {
    Matrix x = to_original(pb.elements[i], pt, pt_inv);
    transported.push_back(i < 3 ? x : delta_inv * x);
  }
  std::vector<Vector> basis_in_m = coordinates_in(alg.m, transported);
  StructureConstants m_table = structure_constants(alg.m, basis_in_m);

  // [L(f|W), L(f|W)] on its own f1, f2, f3, built from the restricted Gram
  // matrix in W's canonical basis.
  const LieAlgebra lw = skew_adjoint_algebra(fw);
  const LieAlgebra lw_derived = derived_subalgebra(lw);
  const Matrix qt = ow.change.transpose();
  const Matrix qt_inv = *inverse(qt);
  std::vector<Matrix> fw_basis;
  for (const auto& x : explicit_f_basis(diag[0], diag[1], diag[2])) fw_basis.push_back(to_original(x, qt, qt_inv));
  StructureConstants w_table = structure_constants(lw_derived, coordinates_in(lw_derived, fw_basis));

  LieAlgebra current = tensor_current(LieAlgebra(w_table), quadratic_quotient(d));
  const bool equal = tables_equal(m_table, current.constants());
  return TheoremTrial{w,
                      change,
                      diag,
                      delta,
                      lw.dim(),
                      lw_derived.dim(),
                      std::move(basis_in_m),
                      std::move(w_table),
                      std::move(m_table),
                      current.constants(),
                      equal};
}

Subspace standard_w(const Field& field) {
  return canonicalize_subspace(field, {unit_vector(field, 4, 0), unit_vector(field, 4, 1), unit_vector(field, 4, 2)}, 4);
}

}  // namespace

OrthogonalAlgebra build_orthogonal_algebra(const Field& field, const DiagonalEntries& entries) {
  require_nonzero(entries);
  for (const auto& x : entries) {
    if (x.field() != field) throw Error(ErrorKind::DescriptorMismatch, "form entry outside " + field.to_string());
  }
  BilinearForm f = diagonal_form(field, entries);
  LieAlgebra l = skew_adjoint_algebra(f);
  LieAlgebra m = derived_subalgebra(l);
  return {std::move(f), std::move(l), std::move(m)};
}

StructureConstants explicit_table(const OrthogonalAlgebra& algebra, const DiagonalEntries& e) {
  const ExplicitBasis pb = explicit_basis(e[0], e[1], e[2], e[3]);
  std::vector<Matrix> mats(pb.elements.begin(), pb.elements.end());
  return structure_constants(algebra.m, coordinates_in(algebra.m, mats));
}

TheoremReport verify_theorem(const Field& field, const DiagonalEntries& entries, std::uint64_t seed) {
  const OrthogonalAlgebra alg = build_orthogonal_algebra(field, entries);
  const FieldElement d = product(entries);
  TheoremTrial standard = run_trial(alg, standard_w(field), d);
  const bool spans = canonicalize_subspace(field, standard.basis_in_m, alg.m.dim()).dim() == alg.m.dim();

  std::mt19937_64 rng(seed);
  constexpr std::size_t kMaxAttempts = 32;
  for (std::size_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::vector<Vector> rows;
    for (int r = 0; r < 3; ++r) {
      Vector v;
      for (int c = 0; c < 4; ++c) v.push_back(random_element(field, rng));
      rows.push_back(std::move(v));
    }
    Subspace w = canonicalize_subspace(field, rows, 4);
    if (w.dim() != 3 || !restrict(alg.form, w).nondegenerate()) continue;
    TheoremTrial random_trial = run_trial(alg, w, d);
    const bool equal = standard.equal && random_trial.equal && spans;
    return TheoremReport{field,
                         entries,
                         d,
                         alg.l.dim(),
                         alg.m.dim(),
                         spans,
                         std::move(standard),
                         std::move(random_trial),
                         seed,
                         attempt,
                         equal};
  }
  throw Error(ErrorKind::NondegenerateWRequired,
              "no random 3-dimensional W with nondegenerate restriction in " + std::to_string(kMaxAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Descent

SimplicityCertificate certify_simple_via_descent(const LieAlgebra& over_k, const Field& base) {
  const Field& k = over_k.field();
  std::string embedding;
  if (k.kind() == FieldKind::QuadraticExtension && k.base() == base) {
    embedding = base.to_string() + " -> " + k.to_string() + " (K = F[X]/(X^2 - " + k.radicand().to_string() + "))";
  } else if (k.kind() == FieldKind::RationalFunctionField && base.kind() == FieldKind::RationalFunctionField &&
             k.characteristic() == base.characteristic() && k.variable() != base.variable()) {
    embedding = base.to_string() + " -> " + k.to_string() + " via " + base.variable() + " = " + k.variable() + "^" +
                std::to_string(k.characteristic());
  } else {
    throw Error(ErrorKind::DescriptorMismatch, k.to_string() + " is not a supported extension of " + base.to_string());
  }
  if (over_k.dim() != 3) throw Error(ErrorKind::WrongDimension, "descent certificates cover 3-dimensional algebras");

  const auto& c = over_k.constants();
  std::vector<Vector> witness{c.bracket_of_basis(1, 2), c.bracket_of_basis(2, 0), c.bracket_of_basis(0, 1)};
  if (canonicalize_subspace(k, witness, 3).dim() != 3) {
    throw Error(ErrorKind::NotPerfect, "algebra is not perfect over " + k.to_string() + "; no simplicity claim");
  }
  std::vector<InferenceStep> steps{
      {"perfect", "[e2,e3], [e3,e1], [e1,e2] span the algebra over " + k.to_string()},
      {"simple_3dim", "a perfect 3-dimensional Lie algebra is simple: proper quotients have dimension <= 2 and are "
                      "not perfect"},
      {"descent", "simple over " + k.to_string() + " implies simple over the subfield " + base.to_string() +
                      ": the K-span J of a nonzero ideal I is L, so L = [L,L] = [L,J] = [L,I] lies in I"},
  };
  return SimplicityCertificate{k, base, std::move(embedding), c, std::move(witness), std::move(steps)};
}

std::vector<Check> check_simplicity_certificate(const SimplicityCertificate& cert) {
  std::vector<Check> checks;
  const Field& k = cert.extension;
  const Field& f = cert.base;
  bool quad = k.kind() == FieldKind::QuadraticExtension && k.base() == f && !is_square(k.radicand());
  bool frob = k.kind() == FieldKind::RationalFunctionField && f.kind() == FieldKind::RationalFunctionField &&
              k.characteristic() == f.characteristic() && k.variable() != f.variable();
  checks.push_back({"extension_of_base", quad || frob});
  bool lie = true;
  try {
    LieAlgebra l(cert.table);
    lie = l.dim() == 3 && is_simple_3dim(l);
  } catch (const Error&) {
    lie = false;
  }
  checks.push_back({"perfect_3dim_over_extension", lie});
  bool witness = cert.perfectness_witness.size() == 3 && cert.table.dim() == 3;
  if (witness) {
    const auto& c = cert.table;
    witness = cert.perfectness_witness[0] == c.bracket_of_basis(1, 2) &&
              cert.perfectness_witness[1] == c.bracket_of_basis(2, 0) &&
              cert.perfectness_witness[2] == c.bracket_of_basis(0, 1) &&
              canonicalize_subspace(k, cert.perfectness_witness, 3).dim() == 3;
  }
  checks.push_back({"perfectness_witness_rank_3", witness});
  return checks;
}

// ---------------------------------------------------------------------------
// Classification

DecompositionCertificate classify(const Field& field, const DiagonalEntries& entries) {
  const OrthogonalAlgebra alg = build_orthogonal_algebra(field, entries);
  const FieldElement d = product(entries);
  TheoremTrial trial = run_trial(alg, standard_w(field), d);
  if (!trial.equal) throw Error(ErrorKind::NotClosed, "multiplication tables disagree; refusing to classify");
  const QuadraticAnalysis analysis = analyze_quadratic(d);
  if (!verify_analysis(analysis)) throw Error(ErrorKind::Domain, "quadratic analysis failed re-verification");

  const std::size_t n = alg.m.dim();
  // Tensor-side vector f_i (x) (u + v x) pulled back through f_i -> f_i, h_i -> f_i (x) x.
  auto pull = [&](std::size_t i, const Vector& coeff) {
    return coeff[0] * trial.basis_in_m[i] + coeff[1] * trial.basis_in_m[3 + i];
  };
  auto span_of = [&](const Vector& coeff) {
    return canonicalize_subspace(field, {pull(0, coeff), pull(1, coeff), pull(2, coeff)}, n);
  };

  DecompositionCertificate cert{field, entries, d, TwoSimpleIdeals{Subspace(field, n), Subspace(field, n)}, {}};
  if (const auto* s = std::get_if<SplitQuotient>(&analysis.kind)) {
    cert.evidence = TwoSimpleIdeals{span_of(s->e_plus), span_of(s->e_minus)};
  } else if (const auto* l = std::get_if<LocalQuotient>(&analysis.kind)) {
    const Vector one{field.one(), field.zero()};
    cert.evidence = SemidirectNR{span_of(one), span_of(l->nilpotent)};
  } else {
    const Field& k = std::get<FieldQuotient>(analysis.kind).extension;
    LieAlgebra over_k(base_change(trial.w_table, k));
    cert.evidence = SimpleByDescent{trial.w_table, certify_simple_via_descent(over_k, field)};
  }
  cert.checks = check_certificate(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// Counterexample

CounterexampleReport counterexample_demo(unsigned p) {
  if (p != 2 && p != 3) throw Error(ErrorKind::UnsupportedPrime, "counterexample supports p = 2 or 3");
  const Field base = Field::rational_functions(p, "t");
  const Field ext = Field::rational_functions(p, "u");
  const FieldElement s = base.generator();
  const bool s_not_pth = !pth_root(s).has_value() && (p != 2 || !is_square(s).has_value());

  // L = [L(f), L(f)] for diag(1,1,1) over F: perfect and 3-dimensional.
  const FieldElement one = base.one();
  const std::array<FieldElement, 3> diag{one, one, one};
  const LieAlgebra lf = skew_adjoint_algebra(diagonal_form(base, diag));
  const LieAlgebra l = derived_subalgebra(lf);
  const bool l_perfect = derived_series(l).perfect;

  // P = L (x) F[X]/(X^p - t), and over K = F[X]/(X^p - t) = F_p(u) the
  // algebra P is L (x) K.
  const LieAlgebra big_p = tensor_current(l, CoefficientAlgebra::pure_power_quotient(s, p));
  StructureConstants lk_table(ext, l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      for (std::size_t k = 0; k < l.dim(); ++k) lk_table(i, j, k) = frobenius_embed(l.constants()(i, j, k), ext);
    }
  }
  const LieAlgebra lk(lk_table);
  SimplicityCertificate p_simple = certify_simple_via_descent(lk, base);

  // P (x) K = L_K (x) K[X]/(X^p - u^p) = L_K (x) K[X]/(X - u)^p.
  const FieldElement u = ext.generator();
  const CoefficientAlgebra a = CoefficientAlgebra::pure_power_quotient(frobenius_embed(s, ext), p);
  const LieAlgebra pk = tensor_current(lk, a);
  Vector nil = zero_vector(ext, p);
  nil[0] = -u;
  nil[1] = ext.one();
  Vector top = a.one();
  for (unsigned i = 0; i + 1 < p; ++i) top = a.multiply(top, nil);
  const std::size_t n = lk.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = zero_vector(ext, pk.dim());
    for (std::size_t q = 0; q < p; ++q) v[q * n + i] = top[q];
    gens.push_back(std::move(v));
  }
  Subspace radical = canonicalize_subspace(ext, gens, pk.dim());
  const bool ideal = is_ideal(pk, radical);
  const bool abelian = bracket_span(pk, radical, radical).dim() == 0;
  std::size_t quotient_dim = 0;
  bool quotient_perfect = false;
  if (ideal) {
    LieAlgebra quotient = quotient_algebra(pk, radical);
    quotient_dim = quotient.dim();
    quotient_perfect = derived_series(quotient).perfect;
  }

  CounterexampleReport report{p,
                              base,
                              ext,
                              s,
                              s_not_pth,
                              l.dim(),
                              l_perfect,
                              big_p.dim(),
                              lk.dim(),
                              pk.dim(),
                              radical,
                              ideal,
                              abelian,
                              quotient_dim,
                              quotient_perfect,
                              std::move(p_simple),
                              {}};
  auto& checks = report.checks;
  checks.push_back({"s_not_pth_power", s_not_pth});
  checks.push_back({"L_perfect_3dim", l_perfect && l.dim() == 3});
  checks.push_back({"P_dim_over_F", big_p.dim() == 3 * p});
  checks.push_back({"radical_nonzero_dim_3", radical.dim() == 3});
  checks.push_back({"radical_is_ideal", ideal});
  checks.push_back({"radical_is_abelian", abelian});
  checks.push_back({"quotient_perfect", quotient_perfect && quotient_dim == 3 * (p - 1)});
  for (auto& c : check_simplicity_certificate(report.p_simple)) checks.push_back({"P_simple_" + c.name, c.ok});
  return report;
}

}  // namespace orthocurrent
