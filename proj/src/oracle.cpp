#include "novikov/oracle.hpp"

#include <cstdlib>
#include <exception>
#include <optional>
#include <string>

#include "novikov/error.hpp"

namespace novikov::oracle {

Budget budget_from_env() {
  Budget b;
  if (const char* env = std::getenv("NOVIKOV_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_elements = v;
  }
  return b;
}

namespace {

std::uint64_t element_count(FieldSpec field, std::size_t dim, const Budget& budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= field.p;
    if (count > budget.max_elements)
      throw Error(ErrorCode::BudgetExceeded,
                  field.to_string() + "^" + std::to_string(dim) + " exceeds the oracle budget of " +
                      std::to_string(budget.max_elements) + " elements");
  }
  return count;
}

}  // namespace

void require_budget(FieldSpec field, std::size_t dim, const Budget& budget) {
  if (field.is_rational())
    throw Error(ErrorCode::InvalidArgument, "the oracle only runs over prime fields");
  element_count(field, dim, budget);
}

Element element_at(FieldSpec field, std::size_t dim, std::uint64_t index) {
  Element x = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    x[i] = Scalar(field, static_cast<long>(index % field.p));
    index /= field.p;
  }
  return x;
}

std::vector<Subspace> enumerate_subspaces(std::size_t dim, FieldSpec field,
                                          const Budget& budget) {
  require_budget(field, dim, budget);
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= dim; ++k) {
    // pivot sets of size k in lexicographic order
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(dim, false);
      for (std::size_t p : pivots) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < dim; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
      std::uint64_t assignments = 1;
      for (std::size_t i = 0; i < free_slots.size(); ++i) assignments *= field.p;
      for (std::uint64_t code = 0; code < assignments; ++code) {
        Matrix m(field, k, dim);
        for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = Scalar::one(field);
        std::uint64_t c = code;
        for (const auto& [r, col] : free_slots) {
          m(r, col) = Scalar(field, static_cast<long>(c % field.p));
          c /= field.p;
        }
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < k; ++r) rows.push_back(m.row(r));
        out.push_back(rref_basis(field, rows, dim));
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == dim - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

namespace {

bool is_nilpotent_element(const AlgebraTable& a, const Element& x) {
  return is_zero(left_normed_power(a, x, a.dim() + 1));
}

std::vector<Element> all_elements(const AlgebraTable& a, const Budget& budget) {
  const std::uint64_t count = element_count(a.field(), a.dim(), budget);
  std::vector<Element> xs;
  xs.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) xs.push_back(element_at(a.field(), a.dim(), i));
  return xs;
}

bool is_commutative_associative_table(const AlgebraTable& a) {
  return verify_identity(a, IdentityKind::Commutative).holds &&
         verify_identity(a, IdentityKind::Associative).holds;
}

bool qualifies(const AlgebraTable& a, const Subspace& candidate, QuotientKind kind) {
  if (candidate.is_full() || !is_ideal(a, candidate)) return false;
  const AlgebraTable q = quotient(a, candidate).algebra;
  return kind == QuotientKind::Domain ? is_integral_domain(q) : is_field(q);
}

Subspace intersect_all(const AlgebraTable& a, const std::vector<Subspace>& ideals,
                       const std::vector<char>& keep) {
  Subspace acc = Subspace::full(a.field(), a.dim());
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (keep[i]) acc = subspace_intersect(acc, ideals[i]);
  return acc;
}

Subspace sum_selected(const AlgebraTable& a, const std::vector<Subspace>& subspaces,
                      const std::vector<char>& keep) {
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (std::size_t i = 0; i < subspaces.size(); ++i)
    if (keep[i]) acc = subspace_sum(acc, subspaces[i]);
  return acc;
}

// Runs flag(i) for every i in [0, n) across OpenMP threads. The first
// exception thrown by any iteration is rethrown after the loop.
template <typename F>
std::vector<char> parallel_flags(std::size_t n, F flag) {
  std::vector<char> out(n, 0);
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = flag(static_cast<std::size_t>(i)) ? 1 : 0;
    } catch (...) {
#pragma omp critical(novikov_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <typename F>
std::vector<char> serial_flags(std::size_t n, F flag) {
  std::vector<char> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = flag(i) ? 1 : 0;
  return out;
}

}  // namespace

bool is_integral_domain(const AlgebraTable& a) {
  if (a.dim() == 0 || !is_commutative_associative_table(a)) return false;
  const std::vector<Element> xs = all_elements(a, {~std::uint64_t{0}});
  for (std::size_t i = 1; i < xs.size(); ++i)
    for (std::size_t j = 1; j < xs.size(); ++j)
      if (is_zero(multiply(a, xs[i], xs[j]))) return false;
  return true;
}

bool is_field(const AlgebraTable& a) {
  if (a.dim() == 0 || !is_commutative_associative_table(a)) return false;
  const std::vector<Element> xs = all_elements(a, {~std::uint64_t{0}});
  std::optional<Element> unit;
  for (const auto& u : xs) {
    bool acts_as_unit = true;
    for (std::size_t i = 0; i < a.dim() && acts_as_unit; ++i)
      acts_as_unit = multiply(a, u, a.basis_element(i)) == a.basis_element(i);
    if (acts_as_unit) {
      unit = u;
      break;
    }
  }
  if (!unit) return false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    bool invertible = false;
    for (std::size_t j = 1; j < xs.size() && !invertible; ++j)
      invertible = multiply(a, xs[i], xs[j]) == *unit;
    if (!invertible) return false;
  }
  return true;
}

// ----------------------------------------------------------- parallel kernels

std::vector<Element> bruteforce_nilpotents(const AlgebraTable& a, const Budget& budget) {
  const std::vector<Element> xs = all_elements(a, budget);
  const auto flags =
      parallel_flags(xs.size(), [&](std::size_t i) { return is_nilpotent_element(a, xs[i]); });
  std::vector<Element> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (flags[i]) out.push_back(xs[i]);
  return out;
}

Subspace sum_of_trivial_ideals(const AlgebraTable& a, const Budget& budget) {
  const std::vector<Subspace> subspaces = enumerate_subspaces(a.dim(), a.field(), budget);
  const auto flags = parallel_flags(
      subspaces.size(), [&](std::size_t i) { return is_trivial_ideal(a, subspaces[i]); });
  return sum_selected(a, subspaces, flags);
}

Subspace quotient_intersection(const AlgebraTable& a, QuotientKind kind, const Budget& budget) {
  const std::vector<Subspace> subspaces = enumerate_subspaces(a.dim(), a.field(), budget);
  const auto flags = parallel_flags(
      subspaces.size(), [&](std::size_t i) { return qualifies(a, subspaces[i], kind); });
  return intersect_all(a, subspaces, flags);
}

BaerTower bruteforce_baer_tower(const AlgebraTable& a, const Budget& budget) {
  require_budget(a.field(), a.dim(), budget);
  BaerTower tower;
  Subspace current = sum_of_trivial_ideals(a, budget);
  tower.stages.push_back(current);
  // B_{k+1} / B_k = B_1(A / B_k); finite dimension stops this within dim steps
  while (!current.is_full()) {
    const Quotient q = quotient(a, current);
    const Subspace next = q.preimage(sum_of_trivial_ideals(q.algebra, budget));
    if (next == current) break;
    current = next;
    tower.stages.push_back(current);
  }
  tower.radical = current;
  return tower;
}

// ------------------------------------------------------------ serial reference

namespace reference {

std::vector<Element> bruteforce_nilpotents(const AlgebraTable& a, const Budget& budget) {
  std::vector<Element> out;
  for (auto& x : all_elements(a, budget))
    if (is_nilpotent_element(a, x)) out.push_back(std::move(x));
  return out;
}

Subspace sum_of_trivial_ideals(const AlgebraTable& a, const Budget& budget) {
  const std::vector<Subspace> subspaces = enumerate_subspaces(a.dim(), a.field(), budget);
  const auto flags = serial_flags(
      subspaces.size(), [&](std::size_t i) { return is_trivial_ideal(a, subspaces[i]); });
  return sum_selected(a, subspaces, flags);
}

Subspace quotient_intersection(const AlgebraTable& a, QuotientKind kind, const Budget& budget) {
  const std::vector<Subspace> subspaces = enumerate_subspaces(a.dim(), a.field(), budget);
  const auto flags = serial_flags(
      subspaces.size(), [&](std::size_t i) { return qualifies(a, subspaces[i], kind); });
  return intersect_all(a, subspaces, flags);
}

}  // namespace reference

}  // namespace novikov::oracle
