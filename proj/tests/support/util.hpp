#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/random.hpp"

namespace novikov::test {

inline Vector vec(FieldSpec f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

inline Vector vq(std::initializer_list<long> xs) { return vec(FieldSpec::rational(), xs); }

inline Subspace span(FieldSpec f, std::size_t n, std::vector<Vector> vs) {
  return rref_basis(f, vs, n);
}

inline Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, Rng& rng,
                            long range = 3) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng, range);
  return m;
}

// Rank-deficient on purpose: a product of thin factors.
inline Matrix random_low_rank(FieldSpec f, std::size_t rows, std::size_t cols, std::size_t r,
                              Rng& rng) {
  return random_matrix(f, rows, r, rng) * random_matrix(f, r, cols, rng);
}

}  // namespace novikov::test
