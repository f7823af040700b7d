#include <doctest.h>

#include "orthocurrent/forms.hpp"
#include "support.hpp"

using namespace orthocurrent;

namespace {

Matrix mat(const Field& f, std::vector<std::vector<long long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(f.from_int(x));
    vs.push_back(std::move(v));
  }
  return Matrix::from_rows(f, vs, rows[0].size());
}

std::vector<FieldElement> ints(const Field& f, std::vector<long long> xs) {
  std::vector<FieldElement> out;
  for (long long x : xs) out.push_back(f.from_int(x));
  return out;
}

bool gram_identity(const BilinearForm& f, const OrthogonalBasisResult& r) {
  return r.change * f.gram() * r.change.transpose() == Matrix::diagonal(f.field(), r.diagonal);
}

}  // namespace

TEST_CASE("make_form") {
  const Field q = Field::rationals();
  auto d = make_form(Matrix::diagonal(q, ints(q, {1, 2, 3, 4})));
  CHECK(d.nondegenerate());
  CHECK_FALSE(d.alternating());
  auto h = make_form(mat(Field::prime(2), {{0, 1}, {1, 0}}));
  CHECK(h.nondegenerate());
  CHECK(h.alternating());
  try {
    make_form(Matrix::diagonal(q, ints(q, {1, 0, 1, 1})));
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  try {
    make_form(mat(q, {{1, 2}, {3, 1}}));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
}

TEST_CASE("discriminant") {
  const Field q = Field::rationals();
  CHECK(discriminant(make_form(Matrix::identity(q, 4))) == q.one());
  CHECK(discriminant(make_form(Matrix::diagonal(q, ints(q, {1, 2, 3, 4})))) == q.from_int(24));
  CHECK(discriminant(make_form(mat(q, {{0, 1}, {1, 0}}))) == q.from_int(-1));
}

TEST_CASE("orthogonalize examples") {
  const Field q = Field::rationals();
  auto diag = make_form(Matrix::diagonal(q, ints(q, {1, 2, 3, 4})));
  auto rd = orthogonalize(diag);
  CHECK(rd.change == Matrix::identity(q, 4));
  CHECK(rd.diagonal == ints(q, {1, 2, 3, 4}));

  auto hyp = make_form(mat(q, {{0, 1}, {1, 0}}));
  auto rh = orthogonalize(hyp);
  CHECK(rh.diagonal == std::vector<FieldElement>{q.from_int(2), parse_scalar("-1/2", q)});
  CHECK(gram_identity(hyp, rh));

  const Field f2 = Field::prime(2);
  auto g2 = make_form(mat(f2, {{1, 1}, {1, 0}}));
  auto r2 = orthogonalize(g2);
  CHECK(r2.diagonal == ints(f2, {1, 1}));
  CHECK(r2.change == mat(f2, {{1, 0}, {1, 1}}));
  CHECK(gram_identity(g2, r2));

  try {
    orthogonalize(make_form(mat(f2, {{0, 1}, {1, 0}})));
    FAIL("expected AlternatingChar2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlternatingChar2);
  }
}

TEST_CASE("char 2 form with an alternating block and an anisotropic vector") {
  const Field f2 = Field::prime(2);
  auto f = make_form(mat(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  auto r = orthogonalize(f);
  CHECK(gram_identity(f, r));
  for (const auto& x : r.diagonal) CHECK_FALSE(x.is_zero());
}

TEST_CASE("restrict") {
  const Field q = Field::rationals();
  auto f = make_form(Matrix::diagonal(q, ints(q, {1, 2, 3, 4})));
  Subspace w = canonicalize_subspace(q, {unit_vector(q, 4, 0), unit_vector(q, 4, 1), unit_vector(q, 4, 2)}, 4);
  CHECK(restrict(f, w).gram() == Matrix::diagonal(q, ints(q, {1, 2, 3})));
  CHECK(restrict(f, Subspace::full(q, 4)).gram() == f.gram());
  auto g = make_form(Matrix::diagonal(q, ints(q, {1, -1, 1, 1})));
  auto line = restrict(g, canonicalize_subspace(q, {Vector{q.one(), q.one(), q.zero(), q.zero()}}, 4));
  CHECK(line.dim() == 1);
  CHECK_FALSE(line.nondegenerate());
  CHECK(line.gram().is_zero());
}

TEST_CASE("orthogonalize and discriminant properties under random congruence") {
  std::mt19937_64 rng(3);
  for (const Field& field : testsupport::all_fields()) {
    CAPTURE(field.to_string());
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n = 2 + rng() % 3;
      std::vector<FieldElement> d;
      for (std::size_t i = 0; i < n; ++i) d.push_back(random_nonzero(field, rng));
      const Matrix p = testsupport::random_invertible(field, n, rng);
      const Matrix g0 = Matrix::diagonal(field, d);
      const Matrix g = p * g0 * p.transpose();
      const BilinearForm f = make_form(g);
      const FieldElement det_p = determinant(p);
      CHECK(discriminant(f) == det_p * det_p * discriminant(make_form(g0)));
      CHECK(is_square(discriminant(f)).has_value() == is_square(discriminant(make_form(g0))).has_value());
      if (f.alternating()) continue;
      auto r = orthogonalize(f);
      CHECK(gram_identity(f, r));
      CHECK(!determinant(r.change).is_zero());
      for (const auto& x : r.diagonal) CHECK_FALSE(x.is_zero());
    }
  }
}
