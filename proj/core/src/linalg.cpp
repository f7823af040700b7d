#include "orthocurrent/linalg.hpp"

#include <sstream>

namespace orthocurrent {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vector operator*(const FieldElement& s, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
  for (const auto& e : entries_) {
    if (e.field() != field_) throw Error(ErrorKind::DescriptorMismatch, "matrix entry outside " + field_.to_string());
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::diagonal(const Field& field, std::span<const FieldElement> entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  std::vector<FieldElement> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length does not match column count");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(entries));
}

Matrix Matrix::unit(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m(i, j) = field.one();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length does not match column count");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix shapes differ");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix shapes differ");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "inner dimensions differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator*(const FieldElement& s, const Matrix& m) {
  Matrix out(m.field_, m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = s * m.entries_[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) os << ", ";
    os << orthocurrent::to_string(row(i));
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pick = r;
    while (pick < a.rows() && a(pick, c).is_zero()) ++pick;
    if (pick == a.rows()) continue;
    if (pick != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(r, j));
    }
    if (!a(r, c).is_one()) {
      FieldElement s = a(r, c).inv();
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * s;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      FieldElement factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  Matrix a = m;
  const Field& f = m.field();
  FieldElement det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pick = c;
    while (pick < n && a(pick, c).is_zero()) ++pick;
    if (pick == n) return f.zero();
    if (pick != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pick, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    FieldElement pinv = a(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      FieldElement factor = a(i, c) * pinv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] >= n) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim), [&] {
    std::vector<std::size_t> p(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) p[i] = i;
    return p;
  }());
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::ShapeMismatch, "vector outside the ambient space");
  Vector coords;
  coords.reserve(dim());
  Vector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    FieldElement c = residual[pivots_[i]];
    if (!c.is_zero()) {
      for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j) {
        if (!basis_(i, j).is_zero()) residual[j] -= c * basis_(i, j);
      }
    }
    coords.push_back(std::move(c));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& x = a.basis_.entries();
  const auto& y = b.basis_.entries();
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (x[k] == y[k]) continue;
    return x[k].to_string() < y[k].to_string();
  }
  return x.size() < y.size();
}

Subspace canonicalize_subspace(const Field& field, const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorKind::ShapeMismatch, "vector length differs from ambient dimension");
  }
  auto red = rref(Matrix::from_rows(field, vectors, ambient_dim));
  std::vector<FieldElement> entries(red.reduced.entries().begin(),
                                    red.reduced.entries().begin() + static_cast<std::ptrdiff_t>(red.rank * ambient_dim));
  return Subspace(Matrix(field, red.rank, ambient_dim, std::move(entries)), std::move(red.pivots));
}

Subspace kernel(const Matrix& m) {
  auto red = rref(m);
  const Field& f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, n, free);
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return canonicalize_subspace(f, basis, n);
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Matrix aug(m.field(), m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  auto red = rref(aug);
  if (red.rank > 0 && red.pivots[red.rank - 1] == n) return std::nullopt;
  Vector x = zero_vector(m.field(), n);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, n);
  return x;
}

MeetJoin subspace_meet_join(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::ShapeMismatch, "subspaces of different spaces");
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();
  std::vector<Vector> all = a.basis_vectors();
  for (auto& v : b.basis_vectors()) all.push_back(std::move(v));
  Subspace sum = canonicalize_subspace(f, all, n);

  // Zassenhaus: rows (a, a) and (b, 0); rows with vanishing left half span
  // the intersection in their right half.
  std::vector<Vector> rows;
  for (const auto& v : a.basis_vectors()) {
    Vector r = v;
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis_vectors()) {
    Vector r = v;
    Vector z = zero_vector(f, n);
    r.insert(r.end(), z.begin(), z.end());
    rows.push_back(std::move(r));
  }
  auto red = rref(Matrix::from_rows(f, rows, 2 * n));
  std::vector<Vector> meet;
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] < n) continue;
    Vector r = red.reduced.row(i);
    meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return {canonicalize_subspace(f, meet, n), std::move(sum)};
}

// ---------------------------------------------------------------------------
// CoordinateMap

CoordinateMap::CoordinateMap(const Field& field, const std::vector<Vector>& basis, std::size_t ambient_dim)
    : span_(field, ambient_dim), transform_(field, 0, 0) {
  const std::size_t k = basis.size();
  std::vector<Vector> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i].size() != ambient_dim) throw Error(ErrorKind::ShapeMismatch, "basis vector length mismatch");
    Vector r = basis[i];
    Vector e = unit_vector(field, k, i);
    r.insert(r.end(), e.begin(), e.end());
    rows.push_back(std::move(r));
  }
  auto red = rref(Matrix::from_rows(field, rows, ambient_dim + k));
  if (red.rank < k || (k > 0 && red.pivots[k - 1] >= ambient_dim)) {
    throw Error(ErrorKind::NotIndependent, "basis vectors are linearly dependent");
  }
  std::vector<Vector> canon, trans;
  for (std::size_t i = 0; i < k; ++i) {
    Vector r = red.reduced.row(i);
    canon.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(ambient_dim));
    trans.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(ambient_dim), r.end());
  }
  span_ = canonicalize_subspace(field, canon, ambient_dim);
  transform_ = Matrix::from_rows(field, trans, k);
}

std::optional<Vector> CoordinateMap::coordinates(const Vector& v) const {
  auto c = span_.coordinates(v);
  if (!c) return std::nullopt;
  // v = c * canonical = c * T * basis
  const std::size_t k = size();
  Vector out = zero_vector(span_.field(), k);
  for (std::size_t i = 0; i < k; ++i) {
    if ((*c)[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!transform_(i, j).is_zero()) out[j] += (*c)[i] * transform_(i, j);
    }
  }
  return out;
}

}  // namespace orthocurrent
