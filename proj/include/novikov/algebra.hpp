#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/linalg.hpp"

namespace novikov {

/// Coordinates of an algebra element in the basis of its AlgebraTable.
using Element = Vector;

/// Finite-dimensional algebra given by structure constants:
/// e_i · e_j = Σ_k c[i][j][k] e_k. Entries never set are zero.
class AlgebraTable {
 public:
  AlgebraTable() = default;
  /// Zero multiplication; basis names default to e1..en.
  AlgebraTable(FieldSpec field, std::size_t dim,
               std::vector<std::string> basis_names = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Vector& product(std::size_t i, std::size_t j) const {
    return cube_[i * dim_ + j];
  }
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return cube_[i * dim_ + j][k];
  }
  void set_product(std::size_t i, std::size_t j, Vector value);

  Element zero() const { return zero_vector(field_, dim_); }
  Element basis_element(std::size_t i) const {
    return unit_vector(field_, dim_, i);
  }

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.cube_ == b.cube_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Vector> cube_;
};

/// Square matrix acting on coordinate columns: derivations, L_x, R_x.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m);
  static LinearMap zero(FieldSpec field, std::size_t n) {
    return LinearMap(Matrix(field, n, n));
  }
  static LinearMap identity(FieldSpec field, std::size_t n) {
    return LinearMap(Matrix::identity(field, n));
  }
  /// Column i = image of e_i.
  static LinearMap from_images(FieldSpec field, const std::vector<Vector>& images);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Vector operator()(const Vector& v) const { return m_ * v; }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    return LinearMap(a.m_ * b.m_);
  }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix m_;
};

enum class Side { Left, Right };

Element multiply(const AlgebraTable& a, const Element& x, const Element& y);

/// Right: column j = e_j·x (the map R_x). Left: column j = x·e_j.
LinearMap operator_matrix(const AlgebraTable& a, const Element& x, Side side);

/// (x,y,z) = (xy)z − x(yz)
Element associator(const AlgebraTable& a, const Element& x, const Element& y,
                   const Element& z);

enum class IdentityKind { Novikov, Eq1, Associative, Commutative, Leibniz };

std::string to_string(IdentityKind kind);

/// Outcome of checking an identity on all basis tuples. On failure,
/// `failing_tuple` holds the basis indices and `lhs`/`rhs` both sides.
struct IdentityReport {
  IdentityKind kind;
  bool holds = true;
  std::string law;  // which law failed, e.g. "right-commutativity"
  std::vector<std::size_t> failing_tuple;
  Element lhs;
  Element rhs;
};

/// Multilinear identities are checked on basis tuples only. `derivation`
/// is required for IdentityKind::Leibniz.
IdentityReport verify_identity(const AlgebraTable& a, IdentityKind kind,
                               const LinearMap* derivation = nullptr);

bool is_novikov(const AlgebraTable& a);
bool is_commutative_associative(const AlgebraTable& a);

/// x^1 = x, x^n = x^{n-1}·x. Throws InvalidArgument for n = 0.
Element left_normed_power(const AlgebraTable& a, const Element& x, std::size_t n);

/// Smallest n with x^n = 0; nullopt when x^{dim+1} ≠ 0, which already
/// rules out every exponent since x^n = R_x^{n-1}(x) lives in the
/// R_x-cyclic subspace of x.
std::optional<std::size_t> r_nilpotency_index(const AlgebraTable& a,
                                              const Element& x);

void require_element(const AlgebraTable& a, const Element& x);

}  // namespace novikov
