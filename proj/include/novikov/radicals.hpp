#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/ideals.hpp"

namespace novikov {

enum class Claim { Lemma1, Lemma3, Theorem1, Lifting, Quasireg, RNil };

std::string to_string(Claim claim);
std::optional<Claim> claim_from_string(std::string_view s);

enum class StepKind {
  Power,          // value = x^exponent
  PowerSquare,    // value = x^exponent · x^exponent
  LiftResidual,   // value = −(x + y − y·x) for y = iterate
  QuasiIdentity,  // value = x + y − y·x (left) or x + y − x·y (right), y = result
};

/// One checked relation: `value ∈ target` (or ∉ when expect_member is false).
struct CertificateStep {
  StepKind kind = StepKind::Power;
  std::string relation;
  std::size_t exponent = 0;  // power of x, when the value is a power
  std::size_t level = 0;     // k of I^[k], or n of [A,A]^[n]
  Element value;
  Element iterate;  // LiftResidual: the y this residual was computed from
  Subspace target;
  bool expect_member = true;
  bool holds = false;
};

/// Re-checkable record of one instance of a bound, lifting, or sampling
/// claim. Raw inputs are kept so recheck() can recompute every step.
struct Certificate {
  Claim claim;
  Element x;
  std::optional<Subspace> ideal;
  std::size_t n = 0;
  Side side = Side::Left;
  std::vector<std::size_t> s_sequence;  // theorem1
  Element result;                       // quasi-inverse for lifting/quasireg
  std::vector<CertificateStep> steps;
  bool holds = false;
};

/// Recomputes every value and target of `cert` from A and the raw inputs.
/// True when every recorded value, target and verdict reproduces and the claim holds.
bool recheck(const AlgebraTable& a, const Certificate& cert);

/// Nilradical of a commutative associative algebra. Over Q or GF(p) with
/// p > dim: kernel of the trace form trace(L_{xy}) on the unital hull,
/// intersected with A. Over GF(p) with p <= dim: kernel of a power of the
/// (linear) Frobenius map x ↦ x^p.
Subspace nilradical_commutative(const AlgebraTable& a);

enum class NilradicalRoute { TraceForm, Frobenius };
NilradicalRoute nilradical_route(const AlgebraTable& a);

enum class RadicalKind { Baer, Lqr };

struct RadicalReport {
  RadicalKind kind;
  Subspace radical;
  Subspace commutator;  // [A,A]
  std::string route;
  std::vector<Certificate> witnesses;
};

struct SamplingOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 20;
};

/// Preimage in A of the nilradical of A/[A,A]. Requires a Novikov,
/// Lie-solvable algebra of characteristic ≠ 2; sampled elements inside
/// are checked r-nilpotent, sampled elements outside are checked not.
RadicalReport baer_radical(const AlgebraTable& a, const SamplingOptions& opts = {});

/// Preimage of the Jacobson radical of A/[A,A], which in finite
/// dimension is its nilradical; sampled elements are checked to be
/// left-quasiregular.
RadicalReport lqr_radical(const AlgebraTable& a, const SamplingOptions& opts = {});

/// left: y with x + y = y·x; right: y with x + y = x·y.
std::optional<Element> quasiregular_solve(const AlgebraTable& a, const Element& x, Side side);

struct LiftResult {
  Element y;
  std::size_t iterations = 0;
  Certificate certificate;
};

/// Left quasi-inverse built by solving in A/[A,A] and correcting with
/// y ← y + v − v·y + (v,y,y) where v = −(x + y − y·x), until v = 0.
/// nullopt when x is not left-quasiregular modulo [A,A].
std::optional<LiftResult> quasi_inverse_lift(const AlgebraTable& a, const Element& x);

/// s_1 = n, s_k = 2 s_{k-1} + 2.
std::vector<std::size_t> s_sequence(std::size_t n, std::size_t count);

/// lemma1: needs (x^n)² = (x^{n+1})² = 0, checks x^{2n+2} = 0.
/// lemma3: needs x^n ∈ I, checks x^{2n+2} ∈ I².
/// theorem1: needs x^n ∈ I, checks x^{s_k} ∈ I^[k] until I^[k] = 0.
/// Throws PreconditionFailed / NotAnIdeal when the premise fails.
Certificate bound_certificate(const AlgebraTable& a, Claim claim, const Element& x,
                              std::size_t n, const std::optional<Subspace>& ideal = std::nullopt);

/// Throws unless A is Novikov, of characteristic ≠ 2, and Lie-solvable.
void require_radical_preconditions(const AlgebraTable& a);

}  // namespace novikov
