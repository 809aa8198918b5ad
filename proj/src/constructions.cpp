#include "novikov/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "novikov/error.hpp"

namespace novikov {

AlgebraTable gd_construct(const AlgebraTable& b, const LinearMap& d) {
  if (!is_commutative_associative(b))
    throw Error(ErrorCode::NotCommutativeAssociative,
                "Gelfand-Dorfman construction needs a commutative associative algebra");
  const IdentityReport leibniz = verify_identity(b, IdentityKind::Leibniz, &d);
  if (!leibniz.holds)
    throw Error(ErrorCode::NotADerivation,
                "map fails Leibniz on (" + b.basis_names()[leibniz.failing_tuple[0]] +
                    ", " + b.basis_names()[leibniz.failing_tuple[1]] + ")");
  AlgebraTable out(b.field(), b.dim(), b.basis_names());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const Element dj = d(b.basis_element(j));
    for (std::size_t i = 0; i < b.dim(); ++i)
      out.set_product(i, j, multiply(b, b.basis_element(i), dj));
  }
  return out;
}

AlgebraWithDerivation example1_algebra(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "squarefree monomial algebra needs k >= 1 variables");
  if (k > 10) throw Error(ErrorCode::InvalidArgument, "squarefree monomial algebra: k above 10");
  const FieldSpec f = FieldSpec::rational();
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::map<unsigned, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    index[masks[i]] = i;
    std::string name;
    for (std::size_t v = 0; v < k; ++v)
      if (masks[i] & (1u << v)) name += "x" + std::to_string(v + 1);
    names.push_back(name);
  }
  const std::size_t n = masks.size();
  AlgebraTable b(f, n, names);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if ((masks[i] & masks[j]) == 0)
        b.set_product(i, j, unit_vector(f, n, index.at(masks[i] | masks[j])));
    images.push_back(Scalar(f, static_cast<long>(std::popcount(masks[i]))) *
                     unit_vector(f, n, i));
  }
  return {std::move(b), LinearMap::from_images(f, images)};
}

AlgebraTable truncated_poly(std::size_t n, bool unital, FieldSpec field) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "truncated polynomial needs n >= 2");
  const std::size_t lowest = unital ? 0 : 1;
  const std::size_t dim = n - lowest;
  std::vector<std::string> names;
  for (std::size_t e = lowest; e < n; ++e)
    names.push_back(e == 0 ? "1" : e == 1 ? "t" : "t" + std::to_string(e));
  AlgebraTable a(field, dim, names);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t e = (i + lowest) + (j + lowest);
      if (e < n) a.set_product(i, j, unit_vector(field, dim, e - lowest));
    }
  return a;
}

LinearMap weighted_euler_derivation(const AlgebraTable& a, const std::vector<long>& weights) {
  if (weights.size() != a.dim())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(weights.size()) + " weights for dimension " +
                    std::to_string(a.dim()));
  Matrix m(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = Scalar(a.field(), weights[i]);
  LinearMap d(std::move(m));
  const IdentityReport r = verify_identity(a, IdentityKind::Leibniz, &d);
  if (!r.holds)
    throw Error(ErrorCode::NotADerivation,
                "weights are incompatible with the grading at (" +
                    a.basis_names()[r.failing_tuple[0]] + ", " +
                    a.basis_names()[r.failing_tuple[1]] + ")");
  return d;
}

AlgebraTable adjoin_unit(const AlgebraTable& a) {
  const FieldSpec f = a.field();
  const std::size_t n = a.dim() + 1;
  std::vector<std::string> names{"1"};
  for (const auto& s : a.basis_names()) names.push_back(s == "1" ? "1'" : s);
  AlgebraTable out(f, n, names);
  const auto embed = [&](const Vector& v) {
    Vector w = zero_vector(f, n);
    std::copy(v.begin(), v.end(), w.begin() + 1);
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.set_product(0, i, unit_vector(f, n, i));
    out.set_product(i, 0, unit_vector(f, n, i));
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out.set_product(i + 1, j + 1, embed(a.product(i, j)));
  return out;
}

AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.field() != b.field())
    throw Error(ErrorCode::FieldMismatch, "direct sum of algebras over different fields");
  const FieldSpec f = a.field();
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.basis_names();
  for (const auto& s : b.basis_names()) {
    std::string name = s;
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  AlgebraTable out(f, n, names);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector w = zero_vector(f, n);
      std::copy(a.product(i, j).begin(), a.product(i, j).end(), w.begin());
      out.set_product(i, j, std::move(w));
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector w = zero_vector(f, n);
      std::copy(b.product(i, j).begin(), b.product(i, j).end(),
                w.begin() + static_cast<std::ptrdiff_t>(a.dim()));
      out.set_product(a.dim() + i, a.dim() + j, std::move(w));
    }
  return out;
}

AlgebraTable zero_algebra(FieldSpec field, std::size_t dim) {
  return AlgebraTable(field, dim);
}

AlgebraTable field_algebra(FieldSpec field) {
  AlgebraTable a(field, 1, {"e"});
  a.set_product(0, 0, unit_vector(field, 1, 0));
  return a;
}

AlgebraTable running_example(FieldSpec field) {
  AlgebraTable a(field, 2);
  a.set_product(0, 0, unit_vector(field, 2, 1));
  return a;
}

AlgebraTable change_basis(const AlgebraTable& a, const Matrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "change of basis has the wrong shape");
  const Matrix p_inv = inverse(p);
  std::vector<Element> f;
  for (std::size_t i = 0; i < a.dim(); ++i) f.push_back(p.column(i));
  AlgebraTable out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out.set_product(i, j, p_inv * multiply(a, f[i], f[j]));
  return out;
}

LinearMap change_basis(const LinearMap& d, const Matrix& p) {
  return LinearMap(inverse(p) * d.matrix() * p);
}

AlgebraTable monomial_algebra(FieldSpec field,
                              const std::vector<std::vector<std::uint32_t>>& monomials) {
  const std::size_t n = monomials.size();
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    index[monomials[i]] = i;
    std::string name;
    for (std::size_t v = 0; v < monomials[i].size(); ++v) {
      if (monomials[i][v] == 0) continue;
      name += "x" + std::to_string(v + 1);
      if (monomials[i][v] > 1) name += "^" + std::to_string(monomials[i][v]);
    }
    names.push_back(name.empty() ? "1" : name);
  }
  AlgebraTable a(field, n, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> m = monomials[i];
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += monomials[j][v];
      if (auto it = index.find(m); it != index.end())
        a.set_product(i, j, unit_vector(field, n, it->second));
    }
  return a;
}

}  // namespace novikov
