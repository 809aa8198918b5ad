#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

/// span{u·v : u ∈ U, v ∈ V}
Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& v);

/// span{uv − vu : u ∈ U, v ∈ V}
Subspace commutator_span(const AlgebraTable& a, const Subspace& u, const Subspace& v);

bool is_ideal(const AlgebraTable& a, const Subspace& u);
bool is_subalgebra(const AlgebraTable& a, const Subspace& u);

/// Smallest two-sided ideal containing S.
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);

enum class CheckMode { Trust, Verify };

/// [U,U] for an ideal U. In a Novikov algebra this span is already an
/// ideal; CheckMode::Verify re-derives that via ideal_closure and throws
/// InternalInconsistency if it fails. Throws NotAnIdeal if U is not one.
Subspace commutator_ideal(const AlgebraTable& a, const Subspace& u,
                          CheckMode mode = CheckMode::Trust);

enum class ChainKind { Right, Derived, Lie, Full };

std::string to_string(ChainKind kind);
std::optional<ChainKind> chain_kind_from_string(std::string_view s);

/// Terms are 1-indexed in `index`: terms[0] is the base.
struct ChainReport {
  ChainKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;            // reached a nonzero fixed point
  std::optional<std::size_t> index;   // first k with term_k = 0
};

/// right:   T_{k+1} = T_k · B
/// derived: T_{k+1} = T_k · T_k
/// lie:     T_{k+1} = [T_k, T_k]   (B must be an ideal)
/// full:    T_k = Σ_{i+j=k} T_i · T_j
/// The base B defaults to the whole algebra.
ChainReport chain(const AlgebraTable& a, ChainKind kind,
                  const std::optional<Subspace>& base = std::nullopt);

struct Classification {
  std::optional<std::size_t> right_nilpotent;
  std::optional<std::size_t> solvable;
  std::optional<std::size_t> lie_solvable;
  std::optional<std::size_t> nilpotent;
};

Classification classify(const AlgebraTable& a);

/// A/I on the coordinates that are not pivots of I's echelon basis.
struct Quotient {
  AlgebraTable algebra;
  Subspace ideal;
  Matrix projection;  // (dim A − dim I) × dim A
  Matrix section;     // dim A × (dim A − dim I), coordinate embedding
  std::vector<std::size_t> complement;

  Element project(const Element& x) const { return projection * x; }
  Element lift(const Element& y) const { return section * y; }
  /// {x ∈ A : project(x) ∈ W}
  Subspace preimage(const Subspace& w) const;
  Subspace image(const Subspace& u) const;
};

/// Throws NotAnIdeal unless I is an ideal of A.
Quotient quotient(const AlgebraTable& a, const Subspace& ideal);

Subspace subalgebra_generated(const AlgebraTable& a, std::span<const Element> elements);

/// I is an ideal with I·I = 0.
bool is_trivial_ideal(const AlgebraTable& a, const Subspace& i);

Subspace span_of(const AlgebraTable& a, std::span<const Element> elements);

}  // namespace novikov
