#pragma once

#include <random>

#include "novikov/ratfunc.hpp"
#include "novikov/random.hpp"

namespace novikov::test {

inline mpq_class small_rational(Rng& rng, long range = 5) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline mpq_class nonzero_rational(Rng& rng, long range = 5) {
  mpq_class q;
  do q = small_rational(rng, range); while (q == 0);
  return q;
}

/// f with f(0) = 0, exact degree `deg` >= 1.
inline Poly random_vanishing_at_zero(Rng& rng, std::size_t deg) {
  std::vector<mpq_class> c(deg + 1, 0);
  for (std::size_t k = 1; k < deg; ++k) c[k] = small_rational(rng);
  c[deg] = nonzero_rational(rng);
  return Poly(c);
}

/// g with g(0) != 0, exact degree `deg`.
inline Poly random_unit_at_zero(Rng& rng, std::size_t deg) {
  std::vector<mpq_class> c(deg + 1, 0);
  for (std::size_t k = 1; k < deg; ++k) c[k] = small_rational(rng);
  c[0] = nonzero_rational(rng);
  if (deg > 0) c[deg] = nonzero_rational(rng);
  return Poly(c);
}

/// f/g in B with deg f, deg g <= max_deg.
inline RatFunc random_in_b(Rng& rng, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> df(1, max_deg), dg(0, max_deg);
  return RatFunc(random_vanishing_at_zero(rng, df(rng)), random_unit_at_zero(rng, dg(rng)));
}

}  // namespace novikov::test
