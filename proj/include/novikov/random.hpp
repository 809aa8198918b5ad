#pragma once

#include <cstdint>
#include <random>

#include "novikov/constructions.hpp"

namespace novikov {

using Rng = std::mt19937_64;

/// Uniform integer in [-range, range] over Q; uniform residue over GF(p).
Scalar random_scalar(FieldSpec field, Rng& rng, long range = 3);
Vector random_vector(FieldSpec field, std::size_t n, Rng& rng, long range = 3);
Element random_element(const AlgebraTable& a, Rng& rng, long range = 3);

/// Upper unitriangular with off-diagonal entries in [-1, 1]; invertible
/// over every field.
Matrix random_unitriangular(FieldSpec field, std::size_t n, Rng& rng);

struct RandomAlgebraOptions {
  std::size_t max_dim = 5;
  bool unital = false;        // adjoin 1 (counts towards max_dim)
  bool mix_basis = true;      // apply a random unitriangular change of basis
  std::size_t perturbations = 3;
};

/// A commutative associative monomial algebra (finite order ideal of
/// monomials in 1-3 variables, optionally with a unit) together with a
/// derivation built from a weighted grading plus Leibniz-validated
/// x^a·∂/∂x_v terms. Non-unital results are nilpotent.
AlgebraWithDerivation random_commutative_with_derivation(FieldSpec field, Rng& rng,
                                                         const RandomAlgebraOptions& opts = {});

}  // namespace novikov
