#pragma once

#include <cstdint>
#include <vector>

#include "novikov/ideals.hpp"

// Brute-force ground truth over small prime fields. Every search is
// exhaustive; inputs beyond the budget are refused, never sampled.
//
// The kernels in novikov::oracle run their outer loops under OpenMP and
// merge per-candidate results in enumeration order, so the output does not
// depend on the thread count. novikov::oracle::reference holds the serial
// versions the tests and benchmarks compare against.

namespace novikov::oracle {

/// Largest field^dim that may be enumerated.
struct Budget {
  std::uint64_t max_elements = 81;  // 3^4
};

/// NOVIKOV_ORACLE_BUDGET if set to a positive integer, else the default.
Budget budget_from_env();

/// Throws InvalidArgument for the rationals, BudgetExceeded when p^dim is
/// over budget.
void require_budget(FieldSpec field, std::size_t dim, const Budget& budget);

/// Every subspace of GF(p)^dim exactly once, by dimension, then pivot set,
/// then free entries.
std::vector<Subspace> enumerate_subspaces(std::size_t dim, FieldSpec field,
                                          const Budget& budget = {});

/// The element with base-p digits of `index` as coordinates.
Element element_at(FieldSpec field, std::size_t dim, std::uint64_t index);

/// All x with x^{dim+1} = 0, in enumeration order.
std::vector<Element> bruteforce_nilpotents(const AlgebraTable& a, const Budget& budget = {});

/// Sum of all ideals I with I·I = 0.
Subspace sum_of_trivial_ideals(const AlgebraTable& a, const Budget& budget = {});

struct BaerTower {
  std::vector<Subspace> stages;  // B_1, B_2, ... up to stabilization
  Subspace radical;
};

BaerTower bruteforce_baer_tower(const AlgebraTable& a, const Budget& budget = {});

enum class QuotientKind { Domain, Field };

/// Intersection of the ideals I with A/I an integral domain (resp. a
/// field); the whole space when no ideal qualifies.
Subspace quotient_intersection(const AlgebraTable& a, QuotientKind kind,
                               const Budget& budget = {});

/// Exhaustive tests on a whole algebra.
bool is_integral_domain(const AlgebraTable& a);
bool is_field(const AlgebraTable& a);

namespace reference {

std::vector<Element> bruteforce_nilpotents(const AlgebraTable& a, const Budget& budget = {});
Subspace sum_of_trivial_ideals(const AlgebraTable& a, const Budget& budget = {});
Subspace quotient_intersection(const AlgebraTable& a, QuotientKind kind,
                               const Budget& budget = {});

}  // namespace reference

}  // namespace novikov::oracle
