#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orthocurrent/forms.hpp"
#include "orthocurrent/linalg.hpp"

namespace orthocurrent {

/// Dense tensor c(i, j, k): the bracket of basis elements i and j has
/// coefficient c(i, j, k) on basis element k.
class StructureConstants {
 public:
  StructureConstants(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  const FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  Vector bracket_of_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<FieldElement> data_;
};

/// Exact entrywise comparison; throws ShapeMismatch for different dimensions.
bool tables_equal(const StructureConstants& a, const StructureConstants& b);

/// Finite-dimensional Lie algebra given by structure constants, optionally
/// with a faithful matrix realization. Antisymmetry, the Jacobi identity
/// and (when present) agreement with matrix commutators are verified on
/// construction; failures throw NotLieAlgebra.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants constants, std::optional<std::vector<Matrix>> realization = std::nullopt);

  const Field& field() const noexcept { return constants_.field(); }
  std::size_t dim() const noexcept { return constants_.dim(); }
  const StructureConstants& constants() const noexcept { return constants_; }
  const std::optional<std::vector<Matrix>>& realization() const noexcept { return realization_; }

  Vector bracket(const Vector& u, const Vector& v) const;
  /// Matrix of ad(b_i) acting on coordinate columns: column j holds [b_i, b_j].
  Matrix ad(std::size_t i) const;
  /// Matrix of the element with the given coordinates; needs a realization.
  Matrix realize(const Vector& coords) const;
  /// Coordinates of a matrix in the realization, if it lies in the span.
  std::optional<Vector> coordinates_of(const Matrix& x) const;

 private:
  StructureConstants constants_;
  std::optional<std::vector<Matrix>> realization_;
  std::optional<CoordinateMap> realization_coords_;
};

/// All x in gl(V) with x^T G + G x = 0, realized by matrices. Throws
/// Degenerate or AlternatingChar2.
LieAlgebra skew_adjoint_algebra(const BilinearForm& f);

/// Structure constants of the subalgebra spanned by `basis` (coordinates in
/// L), in the given order. Throws NotIndependent or NotClosed.
StructureConstants structure_constants(const LieAlgebra& l, const std::vector<Vector>& basis);

/// The subalgebra on `basis`, with the realization transported when present.
LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<Vector>& basis);

/// [A, B] as a subspace of L.
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
bool is_ideal(const LieAlgebra& l, const Subspace& s);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);

struct DerivedSeries {
  /// L, [L,L], ... ; stops when a term repeats or reaches zero.
  std::vector<Subspace> terms;
  bool perfect = false;
  bool solvable = false;
  bool abelian = false;
};

DerivedSeries derived_series(const LieAlgebra& l);
LieAlgebra derived_subalgebra(const LieAlgebra& l);

/// Smallest ideal containing the seeds.
Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& seeds);
Subspace center(const LieAlgebra& l);

/// A 3-dimensional Lie algebra is simple iff it is perfect. Throws
/// WrongDimension otherwise.
bool is_simple_3dim(const LieAlgebra& l);

/// L / I on the standard basis vectors outside I's pivot columns. Throws
/// NotClosed if I is not an ideal.
LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal);

/// Basis f1, f2, f3, h1, h2, h3 of the derived orthogonal algebra of
/// diag(a, b, c, d):
///   f1 = b e12 - a e21,        f2 = c e23 - b e32,        f3 = c e13 - a e31,
///   h1 = ab (d e34 - c e43),   h2 = bc (d e14 - a e41),   h3 = ac (b e42 - d e24).
struct ExplicitBasis {
  std::array<Matrix, 6> elements;

  static constexpr std::array<const char*, 6> names{"f1", "f2", "f3", "h1", "h2", "h3"};
};

/// Throws ZeroEntry if any entry vanishes.
ExplicitBasis explicit_basis(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d);
/// The 3x3 matrices f1, f2, f3 for diag(a, b, c).
std::array<Matrix, 3> explicit_f_basis(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// Commutative associative unital algebra with basis 1, x, ..., x^{n-1}.
class CoefficientAlgebra {
 public:
  /// F itself (dimension 1, no distinguished generator).
  static CoefficientAlgebra ground(const Field& field);
  /// F[X]/(X^degree - s), degree >= 2.
  static CoefficientAlgebra pure_power_quotient(const FieldElement& s, unsigned degree);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  /// Coefficient of basis element k in (basis i) * (basis j).
  const FieldElement& product(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector one() const { return unit_vector(field_, dim_, 0); }
  /// Image of X; nullopt for the ground algebra.
  std::optional<Vector> generator() const;
  const FieldElement& defining_constant() const noexcept { return constant_; }

 private:
  CoefficientAlgebra(Field field, std::size_t dim, std::vector<FieldElement> mult, FieldElement constant);
  void verify() const;

  Field field_;
  std::size_t dim_;
  std::vector<FieldElement> mult_;
  FieldElement constant_;
};

/// L (x) A on the basis l_1(x)a_1, ..., l_n(x)a_1, l_1(x)a_2, ... so that
/// l_i (x) x sits at position n + i.
LieAlgebra tensor_current(const LieAlgebra& l, const CoefficientAlgebra& a);

/// Re-expresses constants over the quadratic extension (or any tower) that
/// embeds their field.
StructureConstants base_change(const StructureConstants& c, const Field& extension);

}  // namespace orthocurrent
