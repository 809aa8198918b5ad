#include <doctest.h>

#include "novikov/error.hpp"
#include "novikov/ratfunc.hpp"
#include "support/polys.hpp"

using namespace novikov;

namespace {

Poly P(std::vector<long> c) {
  std::vector<mpq_class> q;
  for (long v : c) q.emplace_back(v);
  return Poly(q);
}

RatFunc R(std::vector<long> num, std::vector<long> den = {1}) { return RatFunc(P(num), P(den)); }

const RatFunc X = R({0, 1});

}  // namespace

TEST_SUITE("ratfunc") {

TEST_CASE("polynomial arithmetic") {
  CHECK(P({0, 1, 2}).to_string() == "2*x^2 + x");
  CHECK(P({-1, 0, -1}).to_string() == "-x^2 - 1");
  CHECK(P({}).is_zero());
  CHECK_FALSE(P({0, 0}).degree().has_value());
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
  const auto qr = divmod(P({-1, 0, 1}), P({1, 1}));
  CHECK(qr.quotient == P({-1, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({2, 2})) == P({1, 1}));
  CHECK_THROWS_AS(divmod(P({1}), P({})), Error);
}

TEST_CASE("rational function arithmetic") {
  CHECK(X + X == R({0, 2}));
  CHECK(R({0, 1}, {1, 1}) * R({1, 1}) == X);
  const RatFunc two_x_over_two(P({0, 2}), P({2}));
  CHECK(two_x_over_two == X);
  CHECK(two_x_over_two.den() == P({1}));
  CHECK(RatFunc(P({0, 2}), P({4, 2})).den() == P({2, 1}));
  CHECK_THROWS_AS(RatFunc(P({1}), P({})), Error);
  CHECK_THROWS_AS(X / RatFunc(), Error);
}

TEST_CASE("membership in B") {
  CHECK(X.in_b());
  CHECK(R({0, 1}, {1, 1}).in_b());
  CHECK_FALSE(R({1}).in_b());
  CHECK_FALSE(R({1}, {0, 1}).in_b());
  CHECK(RatFunc().in_b());
}

TEST_CASE("derivation") {
  CHECK(rf_derivation(X) == X);
  CHECK(rf_derivation(R({0, 0, 1})) == R({0, 0, 2}));
  CHECK(rf_derivation(RatFunc()).is_zero());
  CHECK_THROWS_AS(rf_derivation(R({1})), Error);
  try {
    rf_derivation(R({1}, {0, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInDomain);
  }
}

TEST_CASE("derivation is Leibniz and B is closed") {
  Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    const RatFunc u = novikov::test::random_in_b(rng, 3), v = novikov::test::random_in_b(rng, 3);
    CHECK((u + v).in_b());
    CHECK((u * v).in_b());
    CHECK(rf_derivation(u).in_b());
    CHECK(rf_derivation(u * v) == rf_derivation(u) * v + u * rf_derivation(v));
    CHECK(rf_derivation(u + v) == rf_derivation(u) + rf_derivation(v));
  }
}

TEST_CASE("GD product and powers") {
  CHECK(gd_product_rf(X, X) == R({0, 0, 1}));
  CHECK(gd_product_rf(X, RatFunc()).is_zero());
  CHECK(gd_product_rf(X, R({0, 0, 1})) == R({0, 0, 0, 2}));
  for (std::size_t k = 1; k <= 10; ++k) {
    const RatFunc p = gd_power_rf(X, k);
    CHECK_FALSE(p.is_zero());
    CHECK(p == RatFunc(Poly::monomial(1, k)));
  }
  CHECK_THROWS_AS(gd_power_rf(X, 0), Error);
}

TEST_CASE("left quasi-inverses") {
  CHECK(left_quasi_inverse_rf(RatFunc()).is_zero());
  const RatFunc y = left_quasi_inverse_rf(X);
  CHECK(y == R({0, 1}, {-1, 1}));
  CHECK((X + y - gd_product_rf(y, X)).is_zero());
  const RatFunc x2 = R({0, 0, 1});
  const RatFunc y2 = left_quasi_inverse_rf(x2);
  CHECK((x2 + y2 - gd_product_rf(y2, x2)).is_zero());

  Rng rng(89);
  for (int t = 0; t < 100; ++t) {
    const RatFunc u = novikov::test::random_in_b(rng, 4);
    const RatFunc w = left_quasi_inverse_rf(u);
    CHECK(w.in_b());
    CHECK((u + w - gd_product_rf(w, u)).is_zero());
  }
}

TEST_CASE("residual examples") {
  const auto r1 = right_qr_residual(P({0, 1}), P({1}));
  CHECK(r1.r == P({0, 2, -1}));
  CHECK(r1.report.which == ResidualCase::NGreater);
  CHECK(r1.report.predicted_degree == 2);
  CHECK(r1.report.predicted_coefficient == -1);
  CHECK(r1.report.matches);

  const auto r2 = right_qr_residual(P({0, 1}), P({1, 1}));
  CHECK(r2.r == P({0, 2, 2, 1}));
  CHECK(r2.report.which == ResidualCase::Equal);
  CHECK(r2.report.matches);

  const auto r3 = right_qr_residual(P({0, 1}), P({1, 0, 1}));
  CHECK(r3.report.which == ResidualCase::MGreater);
  CHECK(r3.report.actual_degree == 5);
  CHECK(r3.report.actual_coefficient == 1);
  CHECK(r3.report.matches);

  CHECK_THROWS_AS(right_qr_residual(P({1, 1}), P({1})), Error);
  CHECK_THROWS_AS(right_qr_residual(P({0, 1}), P({0, 1})), Error);
  CHECK_THROWS_AS(right_qr_residual(P({}), P({1})), Error);
}

TEST_CASE("residual leading term follows the three cases") {
  Rng rng(97);
  std::size_t seen[3] = {0, 0, 0};
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 0; m <= 5; ++m)
      for (int t = 0; t < 8; ++t) {
        const Poly f = novikov::test::random_vanishing_at_zero(rng, n);
        const Poly g = novikov::test::random_unit_at_zero(rng, m);
        const auto [r, rep] = right_qr_residual(f, g);
        CAPTURE(f.to_string());
        CAPTURE(g.to_string());
        CHECK(rep.matches);
        CHECK(rep.nonzero);
        CHECK(r == Poly::x() * g * g + f * g -
                       Poly::x() * Poly::x() * (f.derivative() * g - f * g.derivative()));
        ++seen[static_cast<int>(rep.which)];
      }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

}
