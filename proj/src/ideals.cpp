#include "novikov/ideals.hpp"

#include "novikov/error.hpp"

namespace novikov {

namespace {

void require_subspace(const AlgebraTable& a, const Subspace& u) {
  if (u.ambient_dim() != a.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "subspace of ambient dimension " + std::to_string(u.ambient_dim()) +
                    " in algebra of dimension " + std::to_string(a.dim()));
  if (u.field() != a.field())
    throw Error(ErrorCode::FieldMismatch, "subspace over " + u.field().to_string() +
                                              " in " + a.field().to_string() +
                                              " algebra");
}

// A·U + U·A
Subspace two_sided_action(const AlgebraTable& a, const Subspace& u) {
  std::vector<Vector> rows;
  for (const auto& v : u.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Element e = a.basis_element(i);
      rows.push_back(multiply(a, e, v));
      rows.push_back(multiply(a, v, e));
    }
  return rref_basis(a.field(), rows, a.dim());
}

}  // namespace

Subspace span_of(const AlgebraTable& a, std::span<const Element> elements) {
  for (const auto& x : elements) require_element(a, x);
  return rref_basis(a.field(), elements, a.dim());
}

Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
  require_subspace(a, u);
  require_subspace(a, v);
  std::vector<Vector> rows;
  const auto vb = v.basis_vectors();
  for (const auto& x : u.basis_vectors())
    for (const auto& y : vb) rows.push_back(multiply(a, x, y));
  return rref_basis(a.field(), rows, a.dim());
}

Subspace commutator_span(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
  require_subspace(a, u);
  require_subspace(a, v);
  std::vector<Vector> rows;
  const auto vb = v.basis_vectors();
  for (const auto& x : u.basis_vectors())
    for (const auto& y : vb) rows.push_back(multiply(a, x, y) - multiply(a, y, x));
  return rref_basis(a.field(), rows, a.dim());
}

bool is_ideal(const AlgebraTable& a, const Subspace& u) {
  require_subspace(a, u);
  return u.contains(two_sided_action(a, u));
}

bool is_subalgebra(const AlgebraTable& a, const Subspace& u) {
  return u.contains(subspace_product(a, u, u));
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
  require_subspace(a, s);
  Subspace current = s;
  while (true) {
    Subspace next = subspace_sum(current, two_sided_action(a, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace commutator_ideal(const AlgebraTable& a, const Subspace& u, CheckMode mode) {
  if (!is_ideal(a, u))
    throw Error(ErrorCode::NotAnIdeal, "commutator ideal of a subspace that is not an ideal");
  Subspace c = commutator_span(a, u, u);
  if (mode == CheckMode::Verify && !(ideal_closure(a, c) == c))
    throw Error(ErrorCode::InternalInconsistency,
                "[I,I] is not an ideal; the algebra is not Novikov");
  return c;
}

std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::Right: return "right";
    case ChainKind::Derived: return "derived";
    case ChainKind::Lie: return "lie";
    case ChainKind::Full: return "full";
  }
  return "unknown";
}

std::optional<ChainKind> chain_kind_from_string(std::string_view s) {
  if (s == "right") return ChainKind::Right;
  if (s == "derived") return ChainKind::Derived;
  if (s == "lie") return ChainKind::Lie;
  if (s == "full") return ChainKind::Full;
  return std::nullopt;
}

namespace {

ChainReport recurrent_chain(const AlgebraTable& a, ChainKind kind, const Subspace& base) {
  ChainReport r{kind};
  r.terms.push_back(base);
  while (true) {
    const Subspace& last = r.terms.back();
    if (last.is_zero()) {
      r.index = r.terms.size();
      return r;
    }
    Subspace next;
    switch (kind) {
      case ChainKind::Right: next = subspace_product(a, last, base); break;
      case ChainKind::Derived: next = subspace_product(a, last, last); break;
      case ChainKind::Lie: next = commutator_span(a, last, last); break;
      case ChainKind::Full: break;
    }
    if (next == last) {
      r.stabilized = true;
      return r;
    }
    r.terms.push_back(std::move(next));
  }
}

// Full powers: a run T_s = T_{s+1} = ... = T_{2s} forces T_m = T_s for all
// m ≥ s, since every split i + j = m > 2s has max(i, j) ≥ s inside the run.
ChainReport full_chain(const AlgebraTable& a, const Subspace& base) {
  ChainReport r{ChainKind::Full};
  std::vector<Subspace> t{base};  // t[k-1] = T_k
  std::size_t plateau_start = 1;
  while (true) {
    if (t.back().is_zero()) {
      r.terms = t;
      r.index = t.size();
      return r;
    }
    const std::size_t k = t.size() + 1;
    Subspace next = Subspace::zero(a.field(), a.dim());
    for (std::size_t i = 1; i < k; ++i)
      next = subspace_sum(next, subspace_product(a, t[i - 1], t[k - i - 1]));
    if (!(next == t.back())) plateau_start = k;
    t.push_back(std::move(next));
    if (k >= 2 * plateau_start && t.back() == t[plateau_start - 1] && k > plateau_start) {
      r.terms.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(plateau_start));
      r.stabilized = true;
      return r;
    }
  }
}

}  // namespace

ChainReport chain(const AlgebraTable& a, ChainKind kind,
                  const std::optional<Subspace>& base) {
  const Subspace b = base.value_or(Subspace::full(a.field(), a.dim()));
  require_subspace(a, b);
  if (kind == ChainKind::Lie && !is_ideal(a, b))
    throw Error(ErrorCode::NotAnIdeal, "lie series base must be an ideal");
  if (kind == ChainKind::Full) return full_chain(a, b);
  return recurrent_chain(a, kind, b);
}

Classification classify(const AlgebraTable& a) {
  return {chain(a, ChainKind::Right).index, chain(a, ChainKind::Derived).index,
          chain(a, ChainKind::Lie).index, chain(a, ChainKind::Full).index};
}

Subspace Quotient::preimage(const Subspace& w) const {
  std::vector<Vector> rows = ideal.basis_vectors();
  for (const auto& v : w.basis_vectors()) rows.push_back(lift(v));
  return rref_basis(ideal.field(), rows, ideal.ambient_dim());
}

Subspace Quotient::image(const Subspace& u) const {
  std::vector<Vector> rows;
  for (const auto& v : u.basis_vectors()) rows.push_back(project(v));
  return rref_basis(algebra.field(), rows, algebra.dim());
}

Quotient quotient(const AlgebraTable& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal))
    throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not an ideal");
  const FieldSpec f = a.field();
  const std::size_t n = a.dim();
  std::vector<bool> pivot(n, false);
  for (std::size_t p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) complement.push_back(i);
  const std::size_t q = complement.size();

  Matrix projection(f, q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector r = ideal.reduce(a.basis_element(j));
    for (std::size_t c = 0; c < q; ++c) projection(c, j) = r[complement[c]];
  }
  Matrix section(f, n, q);
  for (std::size_t c = 0; c < q; ++c) section(complement[c], c) = Scalar::one(f);

  std::vector<std::string> names;
  for (std::size_t c : complement) names.push_back(a.basis_names()[c]);
  AlgebraTable qa(f, q, names);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      qa.set_product(i, j, projection * a.product(complement[i], complement[j]));
  return {std::move(qa), ideal, std::move(projection), std::move(section),
          std::move(complement)};
}

Subspace subalgebra_generated(const AlgebraTable& a, std::span<const Element> elements) {
  Subspace current = span_of(a, elements);
  while (true) {
    Subspace next = subspace_sum(current, subspace_product(a, current, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

bool is_trivial_ideal(const AlgebraTable& a, const Subspace& i) {
  return is_ideal(a, i) && subspace_product(a, i, i).is_zero();
}

}  // namespace novikov
