#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "novikov/scalar.hpp"

namespace novikov {

/// Coordinate vector. All entries share one field.
using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Rows given as vectors of length `cols`.
  static Matrix from_rows(FieldSpec field, std::size_t cols,
                          std::span<const Vector> rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows,
                             std::span<const Vector> cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Reduces in place to reduced row-echelon form and returns the pivot
  /// column of each nonzero row. Zero rows end up at the bottom.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, const Vector& v);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// A subspace of field^n held as its reduced row-echelon basis. Two
/// Subspace values span the same set iff they compare equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;

  /// v minus its echelon reduction against the basis; zero iff v ∈ U.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace rref_basis(FieldSpec, std::span<const Vector>, std::size_t);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of `vectors`. Throws FieldMismatch / DimensionMismatch.
Subspace rref_basis(FieldSpec field, std::span<const Vector> vectors,
                    std::size_t ambient_dim);

/// Some y with m·y = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// {v : m·v = 0}.
Subspace kernel(const Matrix& m);

/// Throws DivisionByZero if m is singular.
Matrix inverse(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& v);

}  // namespace novikov
