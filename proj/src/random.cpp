#include "novikov/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace novikov {

Scalar random_scalar(FieldSpec field, Rng& rng, long range) {
  if (!field.is_rational()) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(field.p) - 1);
    return Scalar(field, dist(rng));
  }
  std::uniform_int_distribution<long> dist(-range, range);
  return Scalar(field, dist(rng));
}

Vector random_vector(FieldSpec field, std::size_t n, Rng& rng, long range) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng, range));
  return v;
}

Element random_element(const AlgebraTable& a, Rng& rng, long range) {
  return random_vector(a.field(), a.dim(), rng, range);
}

Matrix random_unitriangular(FieldSpec field, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<long> dist(-1, 1);
  Matrix p = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p(i, j) = Scalar(field, dist(rng));
  return p;
}

namespace {

using Monomial = std::vector<std::uint32_t>;

std::uint32_t degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Random order ideal of nonconstant monomials containing every variable.
std::vector<Monomial> random_order_ideal(std::size_t vars, std::size_t size, Rng& rng) {
  std::set<Monomial> s;
  std::vector<Monomial> order;
  for (std::size_t v = 0; v < vars; ++v) {
    Monomial m(vars, 0);
    m[v] = 1;
    s.insert(m);
    order.push_back(m);
  }
  const auto closed = [&](const Monomial& m) {
    for (std::size_t v = 0; v < vars; ++v) {
      if (m[v] == 0) continue;
      Monomial d = m;
      --d[v];
      if (degree(d) > 0 && !s.count(d)) return false;
    }
    return true;
  };
  while (order.size() < size) {
    std::vector<Monomial> candidates;
    for (const auto& m : order)
      for (std::size_t v = 0; v < vars; ++v) {
        Monomial c = m;
        ++c[v];
        if (!s.count(c) && closed(c) &&
            std::find(candidates.begin(), candidates.end(), c) == candidates.end())
          candidates.push_back(c);
      }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const Monomial c = candidates[pick(rng)];
    s.insert(c);
    order.push_back(c);
  }
  std::stable_sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) {
    return degree(a) < degree(b);
  });
  return order;
}

}  // namespace

AlgebraWithDerivation random_commutative_with_derivation(FieldSpec field, Rng& rng,
                                                         const RandomAlgebraOptions& opts) {
  const std::size_t max_dim = std::max<std::size_t>(opts.max_dim, opts.unital ? 2 : 1);
  const std::size_t budget = max_dim - (opts.unital ? 1 : 0);
  std::uniform_int_distribution<std::size_t> var_dist(1, std::min<std::size_t>(3, budget));
  const std::size_t vars = var_dist(rng);
  std::uniform_int_distribution<std::size_t> size_dist(vars, budget);
  std::vector<Monomial> monomials = random_order_ideal(vars, size_dist(rng), rng);
  if (opts.unital) monomials.insert(monomials.begin(), Monomial(vars, 0));

  const AlgebraTable a = monomial_algebra(field, monomials);
  const std::size_t n = a.dim();
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monomials[i]] = i;

  // weighted grading: d(m) = <w, m>·m
  std::uniform_int_distribution<long> weight_dist(-2, 2);
  std::vector<long> w(vars);
  for (auto& x : w) x = weight_dist(rng);
  Matrix d(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    long deg = 0;
    for (std::size_t v = 0; v < vars; ++v) deg += w[v] * static_cast<long>(monomials[i][v]);
    d(i, i) = Scalar(field, deg);
  }

  // x^t·∂/∂x_v, kept only when it passes the Leibniz check on the quotient
  std::uniform_int_distribution<std::size_t> var_pick(0, vars - 1);
  std::uniform_int_distribution<std::size_t> mono_pick(0, n - 1);
  std::uniform_int_distribution<long> coeff(1, 2);
  for (std::size_t trial = 0; trial < opts.perturbations; ++trial) {
    const std::size_t v = var_pick(rng);
    const Monomial& t = monomials[mono_pick(rng)];
    Matrix cand(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial& m = monomials[i];
      if (m[v] == 0) continue;
      Monomial image = m;
      --image[v];
      for (std::size_t u = 0; u < vars; ++u) image[u] += t[u];
      if (auto it = index.find(image); it != index.end())
        cand(it->second, i) = Scalar(field, static_cast<long>(m[v]));
    }
    const LinearMap candidate(cand);
    if (candidate.matrix().is_zero() ||
        !verify_identity(a, IdentityKind::Leibniz, &candidate).holds)
      continue;
    const Scalar c(field, coeff(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cand(i, j) *= c;
    d = d + cand;
  }

  AlgebraWithDerivation out{a, LinearMap(d)};
  if (opts.mix_basis) {
    const Matrix p = random_unitriangular(field, n, rng);
    out.algebra = change_basis(out.algebra, p);
    out.derivation = change_basis(out.derivation, p);
  }
  return out;
}

}  // namespace novikov
