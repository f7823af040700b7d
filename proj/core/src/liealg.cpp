#include "orthocurrent/liealg.hpp"

#include <deque>

namespace orthocurrent {

StructureConstants::StructureConstants(Field field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), data_(dim * dim * dim, field_.zero()) {}

Vector StructureConstants::bracket_of_basis(std::size_t i, std::size_t j) const {
  Vector v;
  v.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v.push_back((*this)(i, j, k));
  return v;
}

bool tables_equal(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::ShapeMismatch, "tables of different dimension");
  return a == b;
}

// ---------------------------------------------------------------------------
// LieAlgebra

namespace {

std::vector<Vector> flatten_all(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.entries());
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(StructureConstants constants, std::optional<std::vector<Matrix>> realization)
    : constants_(std::move(constants)), realization_(std::move(realization)) {
  const std::size_t n = dim();
  const auto& c = constants_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j ? !c(i, i, k).is_zero() : c(i, j, k) != -c(j, i, k)) {
          throw Error(ErrorKind::NotLieAlgebra, "structure constants are not antisymmetric");
        }
      }
    }
  }
  // Jacobi on basis triples i < j < k; antisymmetry covers the rest.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = bracket(unit_vector(field(), n, i), c.bracket_of_basis(j, k)) +
                     bracket(unit_vector(field(), n, j), c.bracket_of_basis(k, i)) +
                     bracket(unit_vector(field(), n, k), c.bracket_of_basis(i, j));
        if (!is_zero(sum)) throw Error(ErrorKind::NotLieAlgebra, "Jacobi identity fails");
      }
    }
  }
  if (realization_) {
    if (realization_->size() != n) throw Error(ErrorKind::ShapeMismatch, "realization size differs from dimension");
    const auto& ms = *realization_;
    std::size_t side = n == 0 ? 0 : ms.front().rows();
    realization_coords_.emplace(field(), flatten_all(ms), side * side);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(commutator(ms[i], ms[j]) == realize(c.bracket_of_basis(i, j)))) {
          throw Error(ErrorKind::NotLieAlgebra, "matrix commutators disagree with structure constants");
        }
      }
    }
  }
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::ShapeMismatch, "coordinate length differs from dimension");
  Vector out = zero_vector(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || i == j) continue;
      FieldElement s = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const auto& ck = constants_(i, j, k);
        if (!ck.is_zero()) out[k] += s * ck;
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, j) = constants_(i, j, k);
  }
  return m;
}

Matrix LieAlgebra::realize(const Vector& coords) const {
  if (!realization_) throw Error(ErrorKind::Domain, "algebra has no matrix realization");
  if (coords.size() != dim()) throw Error(ErrorKind::ShapeMismatch, "coordinate length differs from dimension");
  const auto& ms = *realization_;
  Matrix out(field(), ms.front().rows(), ms.front().cols());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out = out + coords[i] * ms[i];
  }
  return out;
}

std::optional<Vector> LieAlgebra::coordinates_of(const Matrix& x) const {
  if (!realization_coords_) throw Error(ErrorKind::Domain, "algebra has no matrix realization");
  if (x.entries().size() != realization_coords_->span().ambient_dim()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix size differs from realization");
  }
  return realization_coords_->coordinates(x.entries());
}

// ---------------------------------------------------------------------------
// Constructions

LieAlgebra skew_adjoint_algebra(const BilinearForm& f) {
  if (!f.nondegenerate()) throw Error(ErrorKind::Degenerate, "form is degenerate");
  const Field& field = f.field();
  if (field.characteristic() == 2 && f.alternating()) {
    throw Error(ErrorKind::AlternatingChar2, "alternating form in characteristic 2");
  }
  const std::size_t n = f.dim();
  const Matrix& g = f.gram();
  // Unknown x_{ij} sits at i*n + j; equation (k, l) is (x^T G + G x)_{kl} = 0.
  Matrix system(field, n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t row = k * n + l;
      for (std::size_t i = 0; i < n; ++i) {
        system(row, i * n + k) += g(i, l);
        system(row, i * n + l) += g(k, i);
      }
    }
  }
  Subspace solutions = kernel(system);
  std::vector<Matrix> mats;
  for (const auto& v : solutions.basis_vectors()) mats.emplace_back(field, n, n, v);

  CoordinateMap coords(field, flatten_all(mats), n * n);
  const std::size_t d = mats.size();
  StructureConstants c(field, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      auto w = coords.coordinates(commutator(mats[i], mats[j]).entries());
      if (!w) throw Error(ErrorKind::NotClosed, "skew-adjoint matrices not closed under commutator");
      for (std::size_t k = 0; k < d; ++k) {
        c(i, j, k) = (*w)[k];
        c(j, i, k) = -(*w)[k];
      }
    }
  }
  return LieAlgebra(std::move(c), std::move(mats));
}

StructureConstants structure_constants(const LieAlgebra& l, const std::vector<Vector>& basis) {
  CoordinateMap coords(l.field(), basis, l.dim());
  const std::size_t d = basis.size();
  StructureConstants c(l.field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      auto w = coords.coordinates(l.bracket(basis[i], basis[j]));
      if (!w) {
        throw Error(ErrorKind::NotClosed,
                    "bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j) + " leaves the span");
      }
      for (std::size_t k = 0; k < d; ++k) {
        c(i, j, k) = (*w)[k];
        c(j, i, k) = -(*w)[k];
      }
    }
  }
  return c;
}

LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<Vector>& basis) {
  StructureConstants c = structure_constants(l, basis);
  if (!l.realization()) return LieAlgebra(std::move(c));
  std::vector<Matrix> mats;
  mats.reserve(basis.size());
  for (const auto& v : basis) mats.push_back(l.realize(v));
  return LieAlgebra(std::move(c), std::move(mats));
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector> brackets;
  for (const auto& u : a.basis_vectors()) {
    for (const auto& v : b.basis_vectors()) brackets.push_back(l.bracket(u, v));
  }
  return canonicalize_subspace(l.field(), brackets, l.dim());
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (const auto& v : s.basis_vectors()) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (!s.contains(l.bracket(unit_vector(l.field(), l.dim(), i), v))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) { return s.contains(bracket_span(l, s, s)); }

DerivedSeries derived_series(const LieAlgebra& l) {
  DerivedSeries out;
  Subspace current = Subspace::full(l.field(), l.dim());
  out.terms.push_back(current);
  for (;;) {
    Subspace next = bracket_span(l, current, current);
    if (next == current) break;
    out.terms.push_back(next);
    if (next.dim() == 0) break;
    current = std::move(next);
  }
  out.perfect = out.terms.size() == 1;
  out.solvable = out.terms.back().dim() == 0;
  out.abelian = l.dim() == 0 || (out.terms.size() >= 2 && out.terms[1].dim() == 0);
  return out;
}

LieAlgebra derived_subalgebra(const LieAlgebra& l) {
  Subspace first = bracket_span(l, Subspace::full(l.field(), l.dim()), Subspace::full(l.field(), l.dim()));
  return subalgebra(l, first.basis_vectors());
}

Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& seeds) {
  const std::size_t n = l.dim();
  Subspace s = canonicalize_subspace(l.field(), seeds, n);
  std::deque<Vector> work;
  for (auto& v : s.basis_vectors()) work.push_back(std::move(v));
  while (!work.empty() && s.dim() < n) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Vector w = l.bracket(unit_vector(l.field(), n, i), v);
      if (s.contains(w)) continue;
      std::vector<Vector> grown = s.basis_vectors();
      grown.push_back(w);
      s = canonicalize_subspace(l.field(), grown, n);
      work.push_back(std::move(w));
    }
  }
  return s;
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& r : l.ad(i).row_vectors()) rows.push_back(std::move(r));
  }
  return kernel(Matrix::from_rows(l.field(), rows, n));
}

bool is_simple_3dim(const LieAlgebra& l) {
  if (l.dim() != 3) throw Error(ErrorKind::WrongDimension, "expected a 3-dimensional algebra");
  return bracket_span(l, Subspace::full(l.field(), 3), Subspace::full(l.field(), 3)).dim() == 3;
}

LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal) {
  if (!is_ideal(l, ideal)) throw Error(ErrorKind::NotClosed, "quotient by a subspace that is not an ideal");
  const std::size_t n = l.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) complement.push_back(j);
  }
  const auto& rows = ideal.basis();
  auto reduce = [&](Vector v) {
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      FieldElement c = v[ideal.pivots()[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!rows(i, j).is_zero()) v[j] -= c * rows(i, j);
      }
    }
    return v;
  };
  const std::size_t d = complement.size();
  StructureConstants c(l.field(), d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector w = reduce(l.constants().bracket_of_basis(complement[a], complement[b]));
      for (std::size_t k = 0; k < d; ++k) {
        c(a, b, k) = w[complement[k]];
        c(b, a, k) = -w[complement[k]];
      }
    }
  }
  return LieAlgebra(std::move(c));
}

// ---------------------------------------------------------------------------
// Explicit basis

ExplicitBasis explicit_basis(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
  for (const auto* x : {&a, &b, &c, &d}) {
    if (x->is_zero()) throw Error(ErrorKind::ZeroEntry, "diagonal entries must be nonzero");
  }
  const Field& f = a.field();
  auto e = [&](std::size_t i, std::size_t j) { return Matrix::unit(f, 4, i - 1, j - 1); };
  ExplicitBasis basis{{
      b * e(1, 2) - a * e(2, 1),
      c * e(2, 3) - b * e(3, 2),
      c * e(1, 3) - a * e(3, 1),
      (a * b) * (d * e(3, 4) - c * e(4, 3)),
      (b * c) * (d * e(1, 4) - a * e(4, 1)),
      (a * c) * (b * e(4, 2) - d * e(2, 4)),
  }};
  return basis;
}

std::array<Matrix, 3> explicit_f_basis(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  for (const auto* x : {&a, &b, &c}) {
    if (x->is_zero()) throw Error(ErrorKind::ZeroEntry, "diagonal entries must be nonzero");
  }
  const Field& f = a.field();
  auto e = [&](std::size_t i, std::size_t j) { return Matrix::unit(f, 3, i - 1, j - 1); };
  return {b * e(1, 2) - a * e(2, 1), c * e(2, 3) - b * e(3, 2), c * e(1, 3) - a * e(3, 1)};
}

// ---------------------------------------------------------------------------
// Coefficient algebras and current algebras

CoefficientAlgebra::CoefficientAlgebra(Field field, std::size_t dim, std::vector<FieldElement> mult,
                                       FieldElement constant)
    : field_(std::move(field)), dim_(dim), mult_(std::move(mult)), constant_(std::move(constant)) {
  verify();
}

void CoefficientAlgebra::verify() const {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(multiply(one(), unit_vector(field_, n, i)) == unit_vector(field_, n, i))) {
      throw Error(ErrorKind::Domain, "coefficient algebra is not unital");
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = unit_vector(field_, n, i), ej = unit_vector(field_, n, j);
      if (!(multiply(ei, ej) == multiply(ej, ei))) throw Error(ErrorKind::Domain, "coefficient algebra is not commutative");
      for (std::size_t k = 0; k < n; ++k) {
        Vector ek = unit_vector(field_, n, k);
        if (!(multiply(multiply(ei, ej), ek) == multiply(ei, multiply(ej, ek)))) {
          throw Error(ErrorKind::Domain, "coefficient algebra is not associative");
        }
      }
    }
  }
  if (auto x = generator()) {
    Vector power = one();
    for (std::size_t i = 0; i < n; ++i) power = multiply(power, *x);
    if (!(power == constant_ * one())) throw Error(ErrorKind::Domain, "generator does not satisfy its relation");
  }
}

CoefficientAlgebra CoefficientAlgebra::ground(const Field& field) {
  return CoefficientAlgebra(field, 1, {field.one()}, field.one());
}

CoefficientAlgebra CoefficientAlgebra::pure_power_quotient(const FieldElement& s, unsigned degree) {
  if (degree < 2) throw Error(ErrorKind::Domain, "quotient degree must be at least 2");
  const Field& f = s.field();
  const std::size_t n = degree;
  std::vector<FieldElement> mult(n * n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // x^i x^j = x^{i+j}, with x^n = s.
      if (i + j < n) {
        mult[(i * n + j) * n + i + j] = f.one();
      } else {
        mult[(i * n + j) * n + i + j - n] = s;
      }
    }
  }
  return CoefficientAlgebra(f, n, std::move(mult), s);
}

Vector CoefficientAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "coefficient vector length");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      FieldElement s = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!product(i, j, k).is_zero()) out[k] += s * product(i, j, k);
      }
    }
  }
  return out;
}

std::optional<Vector> CoefficientAlgebra::generator() const {
  if (dim_ < 2) return std::nullopt;
  return unit_vector(field_, dim_, 1);
}

LieAlgebra tensor_current(const LieAlgebra& l, const CoefficientAlgebra& a) {
  if (l.field() != a.field()) throw Error(ErrorKind::DescriptorMismatch, "Lie algebra and coefficient algebra fields differ");
  const std::size_t n = l.dim();
  const std::size_t m = a.dim();
  const auto& lc = l.constants();
  StructureConstants c(l.field(), n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        const auto& lij = lc(i, j, r);
        if (lij.is_zero()) continue;
        for (std::size_t p = 0; p < m; ++p) {
          for (std::size_t q = 0; q < m; ++q) {
            for (std::size_t s = 0; s < m; ++s) {
              const auto& apq = a.product(p, q, s);
              if (!apq.is_zero()) c(p * n + i, q * n + j, s * n + r) += lij * apq;
            }
          }
        }
      }
    }
  }
  return LieAlgebra(std::move(c));
}

StructureConstants base_change(const StructureConstants& c, const Field& extension) {
  const std::size_t n = c.dim();
  StructureConstants out(extension, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = extension.embed(c(i, j, k));
    }
  }
  return out;
}

}  // namespace orthocurrent
