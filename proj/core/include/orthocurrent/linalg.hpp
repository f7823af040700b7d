#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthocurrent/scalars.hpp"

namespace orthocurrent {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const FieldElement& s, const Vector& v);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix diagonal(const Field& field, std::span<const FieldElement> entries);
  /// Rows must all have length `cols`; `cols` is needed for the empty case.
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols);
  /// Matrix unit e_{ij} (zero-based indices).
  static Matrix unit(const Field& field, std::size_t n, std::size_t i, std::size_t j);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  std::vector<Vector> row_vectors() const;
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Commutator xy - yx.
Matrix commutator(const Matrix& x, const Matrix& y);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form. Pivots are chosen by first nonzero
/// entry in row-major scan order.
RrefResult rref(const Matrix& m);
FieldElement determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of F^n kept as its RREF basis, so equality is matrix equality.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(Field field, std::size_t ambient_dim);
  static Subspace full(const Field& field, std::size_t ambient_dim);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v relative to the canonical basis, if v lies in the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Deterministic total order: by dimension, then row-major literals.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;

  friend Subspace canonicalize_subspace(const Field&, const std::vector<Vector>&, std::size_t);
};

Subspace kernel(const Matrix& m);
/// Some solution of m x = rhs with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
Subspace canonicalize_subspace(const Field& field, const std::vector<Vector>& vectors, std::size_t ambient_dim);

struct MeetJoin {
  Subspace intersection;
  Subspace sum;
};

/// Intersection by the Zassenhaus construction, sum by canonicalizing the
/// union of bases.
MeetJoin subspace_meet_join(const Subspace& a, const Subspace& b);

/// Coordinates relative to an arbitrary linearly independent list of
/// vectors; the list is row-reduced once with its transformation matrix.
class CoordinateMap {
 public:
  /// Throws NotIndependent if the vectors are linearly dependent.
  CoordinateMap(const Field& field, const std::vector<Vector>& basis, std::size_t ambient_dim);

  std::size_t size() const noexcept { return span_.dim(); }
  const Subspace& span() const noexcept { return span_; }
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  Subspace span_;
  Matrix transform_;  // canonical rows = transform_ * basis rows
};

}  // namespace orthocurrent
