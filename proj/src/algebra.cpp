#include "novikov/algebra.hpp"

#include "novikov/error.hpp"

namespace novikov {

AlgebraTable::AlgebraTable(FieldSpec field, std::size_t dim,
                           std::vector<std::string> basis_names)
    : field_(field),
      dim_(dim),
      names_(std::move(basis_names)),
      cube_(dim * dim, zero_vector(field, dim)) {
  if (names_.empty())
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != dim)
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(names_.size()) + " basis names for dimension " +
                    std::to_string(dim));
}

void AlgebraTable::set_product(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "structure constant out of shape");
  for (const auto& s : value)
    if (s.field() != field_)
      throw Error(ErrorCode::FieldMismatch, "structure constant over " +
                                                s.field().to_string() + " in " +
                                                field_.to_string() + " algebra");
  cube_[i * dim_ + j] = std::move(value);
}

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw Error(ErrorCode::DimensionMismatch, "linear map must be square");
}

LinearMap LinearMap::from_images(FieldSpec field, const std::vector<Vector>& images) {
  return LinearMap(Matrix::from_columns(field, images.size(), images));
}

void require_element(const AlgebraTable& a, const Element& x) {
  if (x.size() != a.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "element of length " + std::to_string(x.size()) +
                    " in algebra of dimension " + std::to_string(a.dim()));
  for (const auto& s : x)
    if (s.field() != a.field())
      throw Error(ErrorCode::FieldMismatch, "element over " + s.field().to_string() +
                                                " in " + a.field().to_string() +
                                                " algebra");
}

Element multiply(const AlgebraTable& a, const Element& x, const Element& y) {
  require_element(a, x);
  require_element(a, y);
  const std::size_t n = a.dim();
  Element out = a.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = a.product(i, j);
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) out[k] += w * c[k];
    }
  }
  return out;
}

LinearMap operator_matrix(const AlgebraTable& a, const Element& x, Side side) {
  require_element(a, x);
  std::vector<Vector> images;
  images.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Element e = a.basis_element(j);
    images.push_back(side == Side::Right ? multiply(a, e, x) : multiply(a, x, e));
  }
  return LinearMap::from_images(a.field(), images);
}

Element associator(const AlgebraTable& a, const Element& x, const Element& y,
                   const Element& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Novikov: return "novikov";
    case IdentityKind::Eq1: return "eq1";
    case IdentityKind::Associative: return "associative";
    case IdentityKind::Commutative: return "commutative";
    case IdentityKind::Leibniz: return "leibniz";
  }
  return "unknown";
}

namespace {

// Basis vectors plus product shorthands for the tuple sweeps.
struct BasisProducts {
  const AlgebraTable& a;
  std::vector<Element> basis;

  explicit BasisProducts(const AlgebraTable& alg) : a(alg) {
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));
  }
  Element mul(const Element& x, const Element& y) const { return multiply(a, x, y); }
  Element assoc(const Element& x, const Element& y, const Element& z) const {
    return associator(a, x, y, z);
  }
};

bool record_failure(IdentityReport& r, std::string law,
                    std::vector<std::size_t> tuple, Element lhs, Element rhs) {
  if (lhs == rhs) return false;
  r.holds = false;
  r.law = std::move(law);
  r.failing_tuple = std::move(tuple);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return true;
}

}  // namespace

IdentityReport verify_identity(const AlgebraTable& a, IdentityKind kind,
                               const LinearMap* derivation) {
  IdentityReport report{kind};
  const BasisProducts bp(a);
  const auto& e = bp.basis;
  const std::size_t n = a.dim();

  switch (kind) {
    case IdentityKind::Novikov:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            if (record_failure(report, "left-symmetry", {i, j, k},
                               bp.assoc(e[i], e[j], e[k]), bp.assoc(e[j], e[i], e[k])))
              return report;
            const Element ij = bp.mul(e[i], e[j]);
            const Element ik = bp.mul(e[i], e[k]);
            if (record_failure(report, "right-commutativity", {i, j, k},
                               bp.mul(ij, e[k]), bp.mul(ik, e[j])))
              return report;
          }
      break;
    case IdentityKind::Eq1:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const Element base = bp.assoc(e[i], e[j], e[k]);
            for (std::size_t l = 0; l < n; ++l) {
              const Element lhs = bp.mul(base, e[l]);
              if (record_failure(report, "(x,y,z)t = (xt,y,z)", {i, j, k, l}, lhs,
                                 bp.assoc(bp.mul(e[i], e[l]), e[j], e[k])))
                return report;
              if (record_failure(report, "(x,y,z)t = (x,yt,z)", {i, j, k, l}, lhs,
                                 bp.assoc(e[i], bp.mul(e[j], e[l]), e[k])))
                return report;
            }
          }
      break;
    case IdentityKind::Associative:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (record_failure(report, "associativity", {i, j, k},
                               bp.mul(bp.mul(e[i], e[j]), e[k]),
                               bp.mul(e[i], bp.mul(e[j], e[k]))))
              return report;
      break;
    case IdentityKind::Commutative:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (record_failure(report, "commutativity", {i, j}, a.product(i, j),
                             a.product(j, i)))
            return report;
      break;
    case IdentityKind::Leibniz: {
      if (derivation == nullptr)
        throw Error(ErrorCode::InvalidArgument, "leibniz check needs a linear map");
      if (derivation->dim() != n || derivation->matrix().field() != a.field())
        throw Error(ErrorCode::DimensionMismatch, "linear map does not act on the algebra");
      const LinearMap& d = *derivation;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (record_failure(report, "leibniz", {i, j}, d(a.product(i, j)),
                             bp.mul(d(e[i]), e[j]) + bp.mul(e[i], d(e[j]))))
            return report;
      break;
    }
  }
  return report;
}

bool is_novikov(const AlgebraTable& a) {
  return verify_identity(a, IdentityKind::Novikov).holds;
}

bool is_commutative_associative(const AlgebraTable& a) {
  return verify_identity(a, IdentityKind::Commutative).holds &&
         verify_identity(a, IdentityKind::Associative).holds;
}

Element left_normed_power(const AlgebraTable& a, const Element& x, std::size_t n) {
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument,
                "left-normed power x^0 is undefined (no unit is assumed)");
  require_element(a, x);
  Element p = x;
  for (std::size_t k = 1; k < n && !is_zero(p); ++k) p = multiply(a, p, x);
  return p;
}

std::optional<std::size_t> r_nilpotency_index(const AlgebraTable& a,
                                              const Element& x) {
  require_element(a, x);
  Element p = x;
  for (std::size_t n = 1; n <= a.dim() + 1; ++n) {
    if (is_zero(p)) return n;
    p = multiply(a, p, x);
  }
  return std::nullopt;
}

}  // namespace novikov
