#include <doctest.h>

#include "novikov/constructions.hpp"
#include "novikov/error.hpp"
#include "novikov/radicals.hpp"
#include "support/corpus.hpp"
#include "support/util.hpp"

using namespace novikov;
using novikov::test::span;
using novikov::test::vq;

namespace {

const FieldSpec Q = FieldSpec::rational();

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

// GD(F[t]/(t^p), d/dt): its commutator algebra is the Witt algebra W(1),
// which is not solvable.
AlgebraTable witt_gd(std::uint32_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  const AlgebraTable b = truncated_poly(p, true, f);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < p; ++k) {
    Vector v = zero_vector(f, p);
    if (k > 0) v[k - 1] = Scalar(f, static_cast<long>(k));
    images.push_back(v);
  }
  return gd_construct(b, LinearMap::from_images(f, images));
}

std::vector<Element> basis_and_random(const AlgebraTable& a, Rng& rng, int count) {
  std::vector<Element> xs;
  for (std::size_t i = 0; i < a.dim(); ++i) xs.push_back(a.basis_element(i));
  for (int t = 0; t < count; ++t) xs.push_back(random_element(a, rng));
  return xs;
}

}  // namespace

TEST_SUITE("radicals") {

TEST_CASE("nilradical of commutative algebras") {
  const AlgebraTable u3 = truncated_poly(3, true);
  CHECK(nilradical_commutative(u3) == span(Q, 3, {vq({0, 1, 0}), vq({0, 0, 1})}));
  CHECK(nilradical_commutative(direct_sum(field_algebra(Q), field_algebra(Q))).dim() == 0);
  CHECK(nilradical_commutative(truncated_poly(4, false)) == Subspace::full(Q, 3));
  CHECK(code_of([] { nilradical_commutative(novikov::test::gd_truncated(4)); }) ==
        ErrorCode::NotCommutativeAssociative);
}

TEST_CASE("nilradical in small characteristic") {
  const FieldSpec f3 = FieldSpec::prime(3);
  for (std::size_t n : {3, 4, 5}) {
    const AlgebraTable u = truncated_poly(n, true, f3);
    CHECK(nilradical_route(u) == NilradicalRoute::Frobenius);
    std::vector<Vector> rest;
    for (std::size_t k = 1; k < n; ++k) rest.push_back(u.basis_element(k));
    CHECK(nilradical_commutative(u) == rref_basis(f3, rest, n));
  }
  const AlgebraTable prod = direct_sum(direct_sum(field_algebra(f3), field_algebra(f3)),
                                       running_example(f3));
  CHECK(nilradical_commutative(prod) == span(f3, 4, {novikov::test::vec(f3, {0, 0, 1, 0}),
                                                     novikov::test::vec(f3, {0, 0, 0, 1})}));
  CHECK(nilradical_route(running_example(FieldSpec::prime(5))) == NilradicalRoute::TraceForm);
}

TEST_CASE("baer radical examples") {
  const RadicalReport a2 = baer_radical(running_example());
  CHECK(a2.radical == Subspace::full(Q, 2));
  CHECK(a2.route.find("A/[A,A] nilradical preimage") != std::string::npos);
  CHECK(baer_radical(direct_sum(field_algebra(Q), field_algebra(Q))).radical.dim() == 0);
  const auto [b, d] = example1_algebra(2);
  CHECK(baer_radical(gd_construct(b, d)).radical == Subspace::full(Q, 3));
  CHECK(baer_radical(field_algebra(Q)).radical.dim() == 0);
  for (const auto& w : a2.witnesses) CHECK(w.holds);
}

TEST_CASE("lqr radical examples") {
  CHECK(lqr_radical(running_example()).radical == Subspace::full(Q, 2));
  CHECK(lqr_radical(direct_sum(field_algebra(Q), field_algebra(Q))).radical.dim() == 0);
  const RadicalReport u = lqr_radical(truncated_poly(3, true));
  CHECK(u.radical == span(Q, 3, {vq({0, 1, 0}), vq({0, 0, 1})}));
  CHECK(u.route.find("baer radical (finite-dimensional coincidence)") != std::string::npos);
}

TEST_CASE("radical preconditions") {
  CHECK(code_of([] { baer_radical(running_example(FieldSpec::prime(2))); }) ==
        ErrorCode::CharTwoUnsupported);
  CHECK(code_of([] { lqr_radical(witt_gd(3)); }) == ErrorCode::NotLieSolvable);
  CHECK(code_of([] { baer_radical(witt_gd(5)); }) == ErrorCode::NotLieSolvable);
  AlgebraTable bad(Q, 2);
  bad.set_product(0, 1, vq({1, 0}));
  CHECK(code_of([&] { baer_radical(bad); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("quasiregular solve") {
  const AlgebraTable p = truncated_poly(3, false);  // t, t2
  CHECK(*quasiregular_solve(p, vq({1, 0}), Side::Left) == vq({-1, -1}));
  const AlgebraTable g = novikov::test::gd_truncated(4);
  CHECK(*quasiregular_solve(g, vq({1, 0, 0}), Side::Left) == vq({-1, -1, -1}));
  CHECK(*quasiregular_solve(g, vq({0, 0, 0}), Side::Right) == vq({0, 0, 0}));
  CHECK_FALSE(quasiregular_solve(field_algebra(Q), vq({1}), Side::Left).has_value());
}

TEST_CASE("quasi-inverse lifting examples") {
  const AlgebraTable p = truncated_poly(4, false);
  const auto lp = quasi_inverse_lift(p, vq({1, 2, 0}));
  REQUIRE(lp);
  CHECK(lp->iterations == 0);
  CHECK(lp->y == *quasiregular_solve(p, vq({1, 2, 0}), Side::Left));

  const AlgebraTable g = novikov::test::gd_truncated(4);
  const Element t = vq({1, 0, 0});
  const auto lg = quasi_inverse_lift(g, t);
  REQUIRE(lg);
  CHECK(is_zero(t + lg->y - multiply(g, lg->y, t)));
  CHECK(lg->iterations <= 2);
  CHECK(lg->certificate.holds);
  CHECK(recheck(g, lg->certificate));

  const auto l0 = quasi_inverse_lift(g, vq({0, 0, 0}));
  REQUIRE(l0);
  CHECK(is_zero(l0->y));
  CHECK(l0->iterations == 0);
  CHECK_FALSE(quasi_inverse_lift(field_algebra(Q), vq({1})).has_value());
}

TEST_CASE("s-sequence") {
  CHECK(s_sequence(1, 4) == std::vector<std::size_t>{1, 4, 10, 22});
  CHECK(s_sequence(3, 3) == std::vector<std::size_t>{3, 8, 18});
}

TEST_CASE("bound certificate examples") {
  const AlgebraTable g8 = novikov::test::gd_truncated(8);
  Element t = g8.basis_element(0);
  const Certificate c1 = bound_certificate(g8, Claim::Lemma1, t, 4);
  CHECK(c1.holds);
  CHECK(recheck(g8, c1));
  CHECK(is_zero(left_normed_power(g8, t, 8)));

  const AlgebraTable a2 = running_example();
  const Subspace e2 = span(Q, 2, {vq({0, 1})});
  const Certificate c3 = bound_certificate(a2, Claim::Lemma3, vq({1, 0}), 2, e2);
  CHECK(c3.holds);
  CHECK(recheck(a2, c3));
  const Certificate t1 = bound_certificate(a2, Claim::Theorem1, vq({1, 0}), 2, e2);
  CHECK(t1.holds);
  CHECK(t1.s_sequence == std::vector<std::size_t>{2, 6});

  CHECK(code_of([&] { bound_certificate(g8, Claim::Lemma1, t, 1); }) ==
        ErrorCode::PreconditionFailed);
  CHECK(code_of([&] { bound_certificate(a2, Claim::Lemma3, vq({1, 0}), 1, e2); }) ==
        ErrorCode::PreconditionFailed);
  CHECK(code_of([&] {
          bound_certificate(a2, Claim::Theorem1, vq({1, 0}), 1, span(Q, 2, {vq({1, 0})}));
        }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("tampered certificates fail recheck") {
  const AlgebraTable g = novikov::test::gd_truncated(6);
  const Subspace i = chain(g, ChainKind::Right).terms.at(1);
  const Certificate c = bound_certificate(g, Claim::Theorem1, g.basis_element(0), 2, i);
  REQUIRE(c.holds);
  REQUIRE(recheck(g, c));
  Certificate bad = c;
  bad.steps.back().value = g.basis_element(0);
  CHECK_FALSE(recheck(g, bad));
  bad = c;
  bad.steps.back().holds = !bad.steps.back().holds;
  CHECK_FALSE(recheck(g, bad));
  bad = c;
  bad.x = g.basis_element(1);
  CHECK_FALSE(recheck(g, bad));

  const auto lift = quasi_inverse_lift(g, g.basis_element(0) + g.basis_element(1));
  REQUIRE(lift);
  REQUIRE(recheck(g, lift->certificate));
  Certificate lb = lift->certificate;
  lb.result = lb.result + g.basis_element(4);
  CHECK_FALSE(recheck(g, lb));
}

TEST_CASE("x^n in I bounds x^{2n+2} in I^2 and x^{s_k} in I^[k] on the corpus") {
  Rng rng(61);
  std::size_t lemma3 = 0, theorem1 = 0;
  for (const auto& [name, a] : novikov::test::rational_corpus()) {
    CAPTURE(name);
    std::vector<Subspace> ideals;
    for (const auto& t : chain(a, ChainKind::Right).terms) ideals.push_back(t);
    for (int k = 0; k < 3; ++k) {
      const std::vector<Element> g{random_element(a, rng)};
      ideals.push_back(ideal_closure(a, span_of(a, g)));
    }
    for (const auto& x : basis_and_random(a, rng, 4)) {
      for (const auto& i : ideals) {
        for (std::size_t n = 1; n <= a.dim() + 1; ++n) {
          if (!i.contains(left_normed_power(a, x, n))) continue;
          const Certificate l3 = bound_certificate(a, Claim::Lemma3, x, n, i);
          CHECK(l3.holds);
          const Certificate t1 = bound_certificate(a, Claim::Theorem1, x, n, i);
          CHECK(t1.holds);
          CHECK(recheck(a, t1));
          ++lemma3;
          ++theorem1;
          break;
        }
      }
    }
  }
  CHECK(theorem1 > 200);
}

TEST_CASE("baer radical membership is r-nilpotency") {
  Rng rng(67);
  for (const auto& [name, a] : novikov::test::rational_corpus()) {
    CAPTURE(name);
    const Subspace r = baer_radical(a).radical;
    for (const auto& x : basis_and_random(a, rng, 100))
      CHECK(r.contains(x) == r_nilpotency_index(a, x).has_value());
  }
}

TEST_CASE("radical = A, solvability and sampled r-nilpotency agree") {
  Rng rng(71);
  for (const auto& [name, a] : novikov::test::rational_corpus()) {
    CAPTURE(name);
    const bool whole = baer_radical(a).radical.is_full();
    const bool solvable = classify(a).solvable.has_value();
    bool all_nil = true;
    for (const auto& x : basis_and_random(a, rng, 100))
      all_nil = all_nil && r_nilpotency_index(a, x).has_value();
    CHECK(whole == solvable);
    CHECK(whole == all_nil);
  }
}

TEST_CASE("finite-dimensional coincidence and left quasiregularity") {
  Rng rng(73);
  for (const auto& [name, a] : novikov::test::rational_corpus()) {
    CAPTURE(name);
    const RadicalReport b = baer_radical(a);
    const RadicalReport l = lqr_radical(a);
    CHECK(b.radical == l.radical);
    if (l.radical.is_full())
      for (const auto& x : basis_and_random(a, rng, 20))
        CHECK(quasiregular_solve(a, x, Side::Left).has_value());
  }
}

TEST_CASE("lifting agrees with the direct solve") {
  Rng rng(79);
  for (const auto& [name, a] : novikov::test::rational_corpus()) {
    CAPTURE(name);
    const Subspace k = commutator_ideal(a, Subspace::full(a.field(), a.dim()));
    const auto bound = chain(a, ChainKind::Right, k).index;
    REQUIRE(bound);
    for (const auto& x : basis_and_random(a, rng, 10)) {
      const auto direct = quasiregular_solve(a, x, Side::Left);
      const auto lift = quasi_inverse_lift(a, x);
      CHECK(direct.has_value() == lift.has_value());
      if (!lift) continue;
      CHECK(is_zero(x + lift->y - multiply(a, lift->y, x)));
      CHECK(lift->iterations <= *bound);
      CHECK(recheck(a, lift->certificate));
    }
  }
}

}
