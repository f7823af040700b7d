#include "orthocurrent/forms.hpp"

namespace orthocurrent {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  nondegenerate_ = !determinant(gram_).is_zero();
  alternating_ = true;
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (!gram_(i, i).is_zero()) alternating_ = false;
  }
}

FieldElement BilinearForm::evaluate(const Vector& u, const Vector& v) const {
  Vector gv = gram_.apply(v);
  FieldElement s = field().zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero() && !gv[i].is_zero()) s += u[i] * gv[i];
  }
  return s;
}

BilinearForm make_form(const Matrix& gram) {
  if (!gram.is_square()) throw Error(ErrorKind::ShapeMismatch, "Gram matrix must be square");
  if (!(gram == gram.transpose())) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
  BilinearForm f(gram);
  if (!f.nondegenerate()) throw Error(ErrorKind::Degenerate, "Gram matrix has zero determinant");
  return f;
}

BilinearForm diagonal_form(const Field& field, std::span<const FieldElement> entries) {
  return make_form(Matrix::diagonal(field, entries));
}

FieldElement discriminant(const BilinearForm& f) { return determinant(f.gram()); }

namespace {

void add_multiple(Matrix& b, std::size_t target, std::size_t source, const FieldElement& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!b(source, j).is_zero()) b(target, j) += factor * b(source, j);
  }
}

void swap_rows(Matrix& b, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(i, j), b(k, j));
}

}  // namespace

OrthogonalBasisResult orthogonalize(const BilinearForm& f) {
  if (!f.nondegenerate()) throw Error(ErrorKind::Degenerate, "cannot orthogonalize a degenerate form");
  const Field& field = f.field();
  const std::size_t n = f.dim();
  const bool char2 = field.characteristic() == 2;
  if (char2 && f.alternating()) {
    throw Error(ErrorKind::AlternatingChar2, "alternating form in characteristic 2 has no orthogonal basis");
  }
  const Matrix& g = f.gram();
  Matrix b = Matrix::identity(field, n);

  // Rows k.. of b always span the orthogonal complement of rows 0..k-1.
  std::size_t k = 0;
  while (k < n) {
    Matrix gb = b * g * b.transpose();
    std::size_t pick = k;
    while (pick < n && gb(pick, pick).is_zero()) ++pick;
    if (pick == n) {
      if (!char2) {
        // The block is nondegenerate, so some f(v_i, v_j) != 0 and v_i + v_j
        // has value 2 f(v_i, v_j) != 0.
        bool fixed = false;
        for (std::size_t i = k; i < n && !fixed; ++i) {
          for (std::size_t j = i + 1; j < n && !fixed; ++j) {
            if (gb(i, j).is_zero()) continue;
            add_multiple(b, i, j, field.one());
            swap_rows(b, i, k);
            fixed = true;
          }
        }
        if (!fixed) throw Error(ErrorKind::Degenerate, "residual block is zero");
        continue;
      }
      if (k == 0) throw Error(ErrorKind::AlternatingChar2, "form is alternating");
      // Characteristic 2, alternating residual block: replace the previous
      // anisotropic vector u by x = u + w1 (same value c) and project the
      // block away from x. A block vector v with f(v, w1) != 0 then acquires
      // value f(v, w1)^2 / c != 0.
      const FieldElement c = gb(k - 1, k - 1);
      add_multiple(b, k - 1, k, field.one());
      Matrix gx = b * g * b.transpose();
      for (std::size_t j = k; j < n; ++j) add_multiple(b, j, k - 1, -(gx(j, k - 1) / c));
      continue;
    }
    swap_rows(b, pick, k);
    if (pick != k) gb = b * g * b.transpose();
    const FieldElement alpha = gb(k, k);
    for (std::size_t j = k + 1; j < n; ++j) add_multiple(b, j, k, -(gb(j, k) / alpha));
    ++k;
  }

  Matrix final_gram = b * g * b.transpose();
  std::vector<FieldElement> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(final_gram(i, i));
  return {std::move(b), std::move(diag)};
}

BilinearForm restrict(const BilinearForm& f, const Subspace& w) {
  if (w.ambient_dim() != f.dim() || w.field() != f.field()) {
    throw Error(ErrorKind::ShapeMismatch, "subspace does not live in the form's space");
  }
  const Matrix& bw = w.basis();
  return BilinearForm(bw * f.gram() * bw.transpose());
}

}  // namespace orthocurrent
