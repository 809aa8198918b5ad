#pragma once

#include <cstdint>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

struct AlgebraWithDerivation {
  AlgebraTable algebra;
  LinearMap derivation;
};

/// Gelfand–Dorfman product x∘y = x·d(y) on a commutative associative B.
/// Throws NotCommutativeAssociative or NotADerivation.
AlgebraTable gd_construct(const AlgebraTable& b, const LinearMap& d);

/// Square-free monomials of degree ≥ 1 in x1..xk (dimension 2^k − 1),
/// ordered by degree then by index set, with d(m) = deg(m)·m.
AlgebraWithDerivation example1_algebra(std::size_t k);

/// unital: F[t]/(t^n) on 1, t, .., t^{n-1}; otherwise tF[t]/(t^n) on t, .., t^{n-1}.
AlgebraTable truncated_poly(std::size_t n, bool unital,
                            FieldSpec field = FieldSpec::rational());

/// Diagonal map e_i ↦ w_i e_i. Throws NotADerivation if Leibniz fails.
LinearMap weighted_euler_derivation(const AlgebraTable& a,
                                    const std::vector<long>& weights);

/// Unit is the new first basis vector, named "1".
AlgebraTable adjoin_unit(const AlgebraTable& a);

AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b);

AlgebraTable zero_algebra(FieldSpec field, std::size_t dim);

/// One-dimensional e·e = e.
AlgebraTable field_algebra(FieldSpec field);

/// Two-dimensional e1·e1 = e2, all other products zero.
AlgebraTable running_example(FieldSpec field = FieldSpec::rational());

/// Structure constants in the basis f_i = Σ_k p(k, i) e_k; p must be invertible.
AlgebraTable change_basis(const AlgebraTable& a, const Matrix& p);

/// The same linear map written in the basis given by the columns of p.
LinearMap change_basis(const LinearMap& d, const Matrix& p);

/// Monomial algebra: basis = the given exponent vectors (a set closed under
/// taking nonconstant divisors), product = monomial product or zero.
AlgebraTable monomial_algebra(FieldSpec field,
                              const std::vector<std::vector<std::uint32_t>>& monomials);

}  // namespace novikov
