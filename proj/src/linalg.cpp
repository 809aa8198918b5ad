#include "novikov/linalg.hpp"

#include <string>

#include "novikov/error.hpp"

namespace novikov {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vectors of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
}

void require_field(const FieldSpec& expected, const FieldSpec& got) {
  if (expected != got)
    throw Error(ErrorCode::FieldMismatch,
                "expected " + expected.to_string() + ", got " + got.to_string());
}

}  // namespace

Vector zero_vector(FieldSpec field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out;
  out.reserve(a.size());
  for (const auto& s : a) out.push_back(-s);
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols,
                         std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " +
                      std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      require_field(field, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows,
                            std::span<const Vector> cols) {
  return from_rows(field, rows, cols).transpose();
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return novikov::is_zero(data_); }

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < rows_ && (*this)(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != lead)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(pivot_row, j), (*this)(lead, j));
    const Scalar inv = (*this)(lead, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) (*this)(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || (*this)(i, col).is_zero()) continue;
      const Scalar factor = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        (*this)(i, j) -= factor * (*this)(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch,
                "matrix with " + std::to_string(m.cols()) +
                    " columns applied to vector of length " +
                    std::to_string(v.size()));
  Vector out = zero_vector(m.field(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero() && !m(i, j).is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  require_field(a.field(), b.field());
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return rref_basis(field, {}, ambient_dim);
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    rows.push_back(unit_vector(field, ambient_dim, i));
  return rref_basis(field, rows, ambient_dim);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " in ambient dimension " + std::to_string(ambient_dim()));
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return novikov::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace rref_basis(FieldSpec field, std::span<const Vector> vectors,
                    std::size_t ambient_dim) {
  Matrix m = Matrix::from_rows(field, ambient_dim, vectors);
  std::vector<std::size_t> pivots = m.rref();
  Subspace s;
  s.basis_ = Matrix(field, pivots.size(), ambient_dim);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = m(i, j);
  s.pivots_ = std::move(pivots);
  return s;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side of length " + std::to_string(b.size()) +
                    " for " + std::to_string(m.rows()) + " equations");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    require_field(m.field(), b[i].field());
    aug(i, m.cols()) = b[i];
  }
  const std::vector<std::size_t> pivots = aug.rref();
  Vector y = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    y[pivots[i]] = aug(i, m.cols());
  }
  return y;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  const std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return rref_basis(m.field(), basis, m.cols());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] >= n)
    throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "subspaces of ambient dimension " +
                    std::to_string(u.ambient_dim()) + " and " +
                    std::to_string(v.ambient_dim()));
  require_field(u.field(), v.field());
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  std::vector<Vector> rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return rref_basis(u.field(), rows, u.ambient_dim());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const FieldSpec f = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(f, n);
  // U = {x : W x = 0} with W the annihilator of U; solve W (c·V) = 0 for c.
  const Subspace annihilator = kernel(u.basis());
  if (annihilator.is_zero()) return v;
  const Matrix constraints = annihilator.basis() * v.basis().transpose();
  const Subspace coeffs = kernel(constraints);
  std::vector<Vector> rows;
  for (const auto& c : coeffs.basis_vectors()) {
    Vector x = zero_vector(f, n);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) x = x + c[i] * v.basis_vector(i);
    rows.push_back(std::move(x));
  }
  return rref_basis(f, rows, n);
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

}  // namespace novikov
