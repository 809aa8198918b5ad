#include <doctest.h>

#include <algorithm>

#include "novikov/error.hpp"
#include "novikov/linalg.hpp"
#include "support/util.hpp"

using namespace novikov;
using novikov::test::span;
using novikov::test::vec;
using novikov::test::vq;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F7 = FieldSpec::prime(7);

Matrix mq(std::size_t cols, std::vector<Vector> rows) { return Matrix::from_rows(Q, cols, rows); }

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("scalars") {
  CHECK(Scalar(Q, mpq_class(2, 4)).to_string() == "1/2");
  CHECK(Scalar(Q, mpq_class(-3, 6)).to_string() == "-1/2");
  CHECK(Scalar(F7, -1L).residue() == 6);
  CHECK(Scalar(F7, mpq_class(1, 2)).residue() == 4);
  CHECK((Scalar(F7, 3L) * Scalar(F7, 5L)).residue() == 1);
  CHECK(Scalar(F7, 3L).inverse() == Scalar(F7, 5L));
  CHECK_THROWS_AS(Scalar(F3, mpq_class(1, 3)), Error);
  CHECK_THROWS_AS(Scalar(Q, 0L).inverse(), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(Scalar(Q, 1L) + Scalar(F3, 1L), Error);
}

TEST_CASE("field axioms on random scalars") {
  Rng rng(11);
  for (FieldSpec f : {Q, F3, F7}) {
    for (int t = 0; t < 200; ++t) {
      const Scalar a = random_scalar(f, rng, 9), b = random_scalar(f, rng, 9),
                   c = random_scalar(f, rng, 9);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("rref_basis examples") {
  const Subspace full = span(Q, 2, {vq({1, 0}), vq({0, 1})});
  CHECK(full == Subspace::full(Q, 2));
  const Subspace line = span(Q, 2, {vq({1, 1}), vq({2, 2})});
  CHECK(line.dim() == 1);
  CHECK(line.basis_vector(0) == vq({1, 1}));
  CHECK(span(Q, 3, {}).dim() == 0);
  CHECK_THROWS_AS(rref_basis(Q, std::vector<Vector>{vec(F3, {1, 0})}, 2), Error);
}

TEST_CASE("rref_basis is canonical under permutation and scaling") {
  Rng rng(3);
  for (FieldSpec f : {Q, F7}) {
    for (int t = 0; t < 60; ++t) {
      std::vector<Vector> vs;
      const std::size_t n = 4;
      for (int i = 0; i < 3; ++i) vs.push_back(random_vector(f, n, rng));
      vs.push_back(vs[0] + vs[1]);
      const Subspace s = rref_basis(f, vs, n);
      std::vector<Vector> ws = vs;
      std::shuffle(ws.begin(), ws.end(), rng);
      for (auto& w : ws) {
        Scalar c = random_scalar(f, rng, 5);
        if (c.is_zero()) c = Scalar::one(f);
        w = c * w;
      }
      CHECK(rref_basis(f, ws, n) == s);
      CHECK(rref_basis(f, s.basis_vectors(), n) == s);
    }
  }
}

TEST_CASE("solve examples") {
  CHECK(*solve(mq(1, {vq({2})}), vq({1})) == Vector{Scalar(Q, mpq_class(1, 2))});
  CHECK_FALSE(solve(mq(1, {vq({0})}), vq({1})).has_value());
  CHECK(*solve(mq(2, {vq({1, 1})}), vq({1})) == vq({1, 0}));
  CHECK_THROWS_AS(solve(mq(2, {vq({1, 1})}), vq({1, 2})), Error);
}

TEST_CASE("solve succeeds exactly on the column space") {
  Rng rng(5);
  for (FieldSpec f : {Q, F3}) {
    for (int t = 0; t < 80; ++t) {
      const Matrix m = novikov::test::random_low_rank(f, 4, 5, 1 + t % 3, rng);
      const Vector inside = m * random_vector(f, 5, rng);
      const auto y = solve(m, inside);
      REQUIRE(y.has_value());
      CHECK(m * *y == inside);

      const Vector b = random_vector(f, 4, rng);
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < 5; ++j) cols.push_back(m.column(j));
      const bool in_span = rref_basis(f, cols, 4).contains(b);
      const auto z = solve(m, b);
      CHECK(z.has_value() == in_span);
      if (z) CHECK(m * *z == b);
    }
  }
}

TEST_CASE("kernel examples and rank-nullity") {
  CHECK(kernel(Matrix::identity(Q, 2)).dim() == 0);
  CHECK(kernel(Matrix(Q, 2, 2)) == Subspace::full(Q, 2));
  const Subspace k = kernel(mq(2, {vq({1, 1})}));
  CHECK(k == span(Q, 2, {vq({1, -1})}));

  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const Matrix m = novikov::test::random_low_rank(F7, 3, 5, 1 + t % 3, rng);
    const Subspace ker = kernel(m);
    CHECK(ker.dim() + m.rank() == 5);
    for (const auto& v : ker.basis_vectors()) CHECK(is_zero(m * v));
  }
}

TEST_CASE("inverse") {
  Rng rng(9);
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    const Matrix m = novikov::test::random_matrix(Q, 3, 3, rng);
    if (m.rank() < 3) {
      CHECK_THROWS_AS(inverse(m), Error);
      continue;
    }
    CHECK(inverse(m) * m == Matrix::identity(Q, 3));
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("lattice examples") {
  const Subspace e1 = span(Q, 2, {vq({1, 0})});
  const Subspace e2 = span(Q, 2, {vq({0, 1})});
  CHECK(subspace_sum(e1, e2) == Subspace::full(Q, 2));
  CHECK(subspace_intersect(e1, e2).dim() == 0);
  CHECK(contains(span(Q, 2, {vq({1, 1})}), vq({2, 2})));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(Q, 3)), Error);
}

TEST_CASE("intersection agrees with element enumeration over GF(3)") {
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    std::vector<Vector> us, vs;
    for (int i = 0; i < 1 + t % 3; ++i) us.push_back(random_vector(F3, 3, rng));
    for (int i = 0; i < 1 + (t / 3) % 3; ++i) vs.push_back(random_vector(F3, 3, rng));
    const Subspace u = rref_basis(F3, us, 3), v = rref_basis(F3, vs, 3);
    const Subspace w = subspace_intersect(u, v);
    std::size_t count = 0;
    for (long a = 0; a < 3; ++a)
      for (long b = 0; b < 3; ++b)
        for (long c = 0; c < 3; ++c) {
          const Vector x = vec(F3, {a, b, c});
          const bool both = u.contains(x) && v.contains(x);
          CHECK(w.contains(x) == both);
          count += both;
        }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < w.dim(); ++i) expected *= 3;
    CHECK(count == expected);
    CHECK(u.dim() + v.dim() == subspace_sum(u, v).dim() + w.dim());
  }
}

TEST_CASE("rational rank bounds every modular rank") {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    Matrix m(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = Scalar(Q, static_cast<long>(rng() % 21) - 10);
    const std::size_t rq = m.rank();
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 1000003u}) {
      const FieldSpec f = FieldSpec::prime(p);
      Matrix mp(f, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) mp(i, j) = Scalar(f, m(i, j).to_rational());
      CHECK(mp.rank() <= rq);
      // Hadamard: every minor is at most 20^4 < 1000003 in absolute value.
      if (p == 1000003u) CHECK(mp.rank() == rq);
    }
  }
}

}
