#include <doctest.h>

#include "orthocurrent/coeff_algebra.hpp"
#include "orthocurrent/forms.hpp"
#include "orthocurrent/structure.hpp"
#include "support.hpp"

using namespace orthocurrent;

namespace {

DiagonalEntries entries(const Field& f, long long a, long long b, long long c, long long d) {
  return {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)};
}

CertificateCase expected_case(const Field& f, const FieldElement& d) {
  if (!is_square(d)) return CertificateCase::SimpleByDescent;
  return f.characteristic() == 2 ? CertificateCase::SemidirectNR : CertificateCase::TwoSimpleIdeals;
}

}  // namespace

TEST_CASE("verify_theorem examples") {
  const Field q = Field::rationals();
  const auto r = verify_theorem(q, entries(q, 1, 2, 3, 4));
  CHECK(r.equal);
  CHECK(r.discriminant == q.from_int(24));
  CHECK(r.dim_l == 6);
  CHECK(r.dim_m == 6);
  CHECK(r.standard.dim_lw == 3);
  CHECK(r.standard.dim_lw_derived == 3);

  const Field f2 = Field::prime(2);
  const auto r2 = verify_theorem(f2, entries(f2, 1, 1, 1, 1));
  CHECK(r2.equal);
  CHECK(r2.dim_l == 10);
  CHECK(r2.dim_m == 6);
  CHECK(r2.standard.dim_lw == 6);
  CHECK(r2.standard.dim_lw_derived == 3);

  const Field f3 = Field::prime(3);
  const auto r3 = verify_theorem(f3, entries(f3, 1, 1, 1, 1));
  CHECK(r3.equal);
  CHECK(r3.discriminant == f3.one());

  CHECK_THROWS_AS(verify_theorem(f3, entries(f3, 1, 2, 3, 4)), Error);
}

TEST_CASE("verify_theorem is deterministic in the seed") {
  const Field q = Field::rationals();
  const auto a = verify_theorem(q, entries(q, 1, -2, 5, 7), 42);
  const auto b = verify_theorem(q, entries(q, 1, -2, 5, 7), 42);
  CHECK(a.random_w.w == b.random_w.w);
  CHECK(a.random_w.m_table == b.random_w.m_table);
}

TEST_CASE("explicit table matches the hand-written brackets") {
  std::mt19937_64 rng(2);
  for (const Field& f : testsupport::descriptor_fields()) {
    for (int i = 0; i < 3; ++i) {
      const auto e = testsupport::random_entries(f, rng);
      CHECK(explicit_table(build_orthogonal_algebra(f, e), e) == testsupport::expected_tensor(f, e));
    }
  }
}

TEST_CASE("classify examples") {
  const Field q = Field::rationals();
  const auto c1 = classify(q, entries(q, 1, 1, 1, 1));
  CHECK(c1.which() == CertificateCase::TwoSimpleIdeals);
  CHECK(all_ok(c1.checks));
  CHECK(all_ok(check_certificate(c1)));

  const Field f2 = Field::prime(2);
  const auto c2 = classify(f2, entries(f2, 1, 1, 1, 1));
  CHECK(c2.which() == CertificateCase::SemidirectNR);
  CHECK(all_ok(check_certificate(c2)));

  const Field f3 = Field::prime(3);
  const auto c3 = classify(f3, entries(f3, 1, 1, 1, 2));
  CHECK(c3.which() == CertificateCase::SimpleByDescent);
  CHECK(all_ok(check_certificate(c3)));
  CHECK(std::get<SimpleByDescent>(c3.evidence).descent.extension == Field::parse("F3[sqrt 2]"));

  const Field f2t = Field::rational_functions(2);
  const DiagonalEntries e{f2t.generator(), f2t.one(), f2t.one(), f2t.one()};
  const auto c4 = classify(f2t, e);
  CHECK(c4.which() == CertificateCase::SimpleByDescent);
  CHECK(all_ok(check_certificate(c4)));
}

TEST_CASE("checker rejects tampered certificates") {
  const Field q = Field::rationals();
  auto c1 = classify(q, entries(q, 1, 1, 1, 1));
  auto& two = std::get<TwoSimpleIdeals>(c1.evidence);
  two.second = two.first;
  CHECK_FALSE(all_ok(check_certificate(c1)));

  const Field f2 = Field::prime(2);
  auto c2 = classify(f2, entries(f2, 1, 1, 1, 1));
  auto& nr = std::get<SemidirectNR>(c2.evidence);
  std::swap(nr.n, nr.r);
  CHECK_FALSE(all_ok(check_certificate(c2)));

  const Field f3 = Field::prime(3);
  auto c3 = classify(f3, entries(f3, 1, 1, 1, 2));
  c3.form[3] = f3.one();
  CHECK_FALSE(all_ok(check_certificate(c3)));

  auto c4 = classify(f3, entries(f3, 1, 1, 1, 2));
  auto& d = std::get<SimpleByDescent>(c4.evidence);
  d.w_table(0, 1, 2) = d.w_table(0, 1, 2) + f3.one();
  d.w_table(1, 0, 2) = -d.w_table(0, 1, 2);
  CHECK_FALSE(all_ok(check_certificate(c4)));
}

TEST_CASE("descent certificates") {
  const Field k = Field::parse("F3[sqrt 2]");
  const auto one = k.one();
  const LieAlgebra so3 = skew_adjoint_algebra(diagonal_form(k, std::vector<FieldElement>{one, one, one}));
  const auto cert = certify_simple_via_descent(so3, Field::prime(3));
  CHECK(all_ok(check_simplicity_certificate(cert)));
  CHECK(cert.steps.size() == 3);
  try {
    certify_simple_via_descent(LieAlgebra(StructureConstants(k, 3)), Field::prime(3));
    FAIL("expected NotPerfect");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPerfect);
  }

  const Field f2u = Field::rational_functions(2, "u");
  const auto u = f2u.generator();
  const LieAlgebra l = derived_subalgebra(
      skew_adjoint_algebra(diagonal_form(f2u, std::vector<FieldElement>{f2u.one(), u, u + f2u.one()})));
  const auto c2 = certify_simple_via_descent(l, Field::rational_functions(2));
  CHECK(all_ok(check_simplicity_certificate(c2)));
}

TEST_CASE("counterexample p = 2") {
  const auto r = counterexample_demo(2);
  CHECK(r.s_not_pth_power);
  CHECK(r.l_dim == 3);
  CHECK(r.l_perfect);
  CHECK(r.p_dim_over_base == 6);
  CHECK(r.p_dim_over_extension == 3);
  CHECK(r.tensor_dim == 6);
  CHECK(r.radical.dim() == 3);
  CHECK(r.radical_ideal);
  CHECK(r.radical_abelian);
  CHECK(r.quotient_dim == 3);
  CHECK(r.quotient_perfect);
  CHECK(all_ok(r.checks));
  CHECK(all_ok(check_simplicity_certificate(r.p_simple)));
  CHECK_FALSE(is_square(Field::rational_functions(2).generator()));
}

TEST_CASE("counterexample p = 3 and unsupported primes") {
  const auto r = counterexample_demo(3);
  CHECK(r.radical.dim() == 3);
  CHECK(r.tensor_dim == 9);
  CHECK(r.quotient_dim == 6);
  CHECK(all_ok(r.checks));
  try {
    counterexample_demo(5);
    FAIL("expected UnsupportedPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedPrime);
  }
}

TEST_CASE("randomized trichotomy with independent re-verification") {
  std::mt19937_64 rng(99);
  for (const Field& f : testsupport::descriptor_fields()) {
    CAPTURE(f.to_string());
    for (int i = 0; i < 4; ++i) {
      const auto e = testsupport::random_entries(f, rng);
      const auto cert = classify(f, e);
      CHECK(cert.which() == expected_case(f, cert.discriminant));
      CHECK(all_ok(cert.checks));
      CHECK(all_ok(check_certificate(cert)));
      const auto alg = build_orthogonal_algebra(f, e);
      if (const auto* t = std::get_if<TwoSimpleIdeals>(&cert.evidence)) {
        for (const Subspace* s : {&t->first, &t->second}) {
          Vector v = zero_vector(f, 6);
          for (const auto& b : s->basis_vectors()) v = v + random_element(f, rng) * b;
          if (!is_zero(v)) CHECK(ideal_closure(alg.m, {v}) == *s);
        }
      } else if (const auto* nr = std::get_if<SemidirectNR>(&cert.evidence)) {
        CHECK(bracket_span(alg.m, nr->r, nr->r).dim() == 0);
        CHECK(nr->r.contains(bracket_span(alg.m, nr->n, nr->r)));
      }
      const auto th = verify_theorem(f, e, rng());
      CHECK(th.equal);
    }
  }
}
