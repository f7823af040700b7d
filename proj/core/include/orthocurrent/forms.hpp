#pragma once

#include <vector>

#include "orthocurrent/linalg.hpp"

namespace orthocurrent {

/// Symmetric bilinear form given by its Gram matrix. Construction through
/// make_form rejects asymmetric and degenerate Gram matrices; restrict() may
/// produce degenerate forms, which callers check via nondegenerate().
class BilinearForm {
 public:
  const Field& field() const noexcept { return gram_.field(); }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  bool nondegenerate() const noexcept { return nondegenerate_; }
  /// Every diagonal entry is zero.
  bool alternating() const noexcept { return alternating_; }

  FieldElement evaluate(const Vector& u, const Vector& v) const;

 private:
  explicit BilinearForm(Matrix gram);

  Matrix gram_;
  bool nondegenerate_ = false;
  bool alternating_ = false;

  friend BilinearForm make_form(const Matrix& gram);
  friend BilinearForm restrict(const BilinearForm& f, const Subspace& w);
};

/// Throws NotSymmetric or Degenerate.
BilinearForm make_form(const Matrix& gram);
BilinearForm diagonal_form(const Field& field, std::span<const FieldElement> entries);

/// Determinant of the Gram matrix in the stored basis.
FieldElement discriminant(const BilinearForm& f);

struct OrthogonalBasisResult {
  /// Rows are the new basis vectors in the old coordinates.
  Matrix change;
  std::vector<FieldElement> diagonal;
};

/// Orthogonal basis with all diagonal values nonzero. Throws Degenerate, or
/// AlternatingChar2 when the form is alternating in characteristic 2.
OrthogonalBasisResult orthogonalize(const BilinearForm& f);

/// Gram matrix B_W G B_W^T on the canonical basis of W.
BilinearForm restrict(const BilinearForm& f, const Subspace& w);

}  // namespace orthocurrent
