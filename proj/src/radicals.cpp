#include "novikov/radicals.hpp"

#include "novikov/constructions.hpp"
#include "novikov/error.hpp"
#include "novikov/random.hpp"

namespace novikov {

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::Lemma1: return "lemma1";
    case Claim::Lemma3: return "lemma3";
    case Claim::Theorem1: return "theorem1";
    case Claim::Lifting: return "lifting";
    case Claim::Quasireg: return "quasireg";
    case Claim::RNil: return "rnil";
  }
  return "unknown";
}

std::optional<Claim> claim_from_string(std::string_view s) {
  for (Claim c : {Claim::Lemma1, Claim::Lemma3, Claim::Theorem1, Claim::Lifting,
                  Claim::Quasireg, Claim::RNil})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

// Exponents past this are only reachable for elements that are not
// r-nilpotent; computing them exactly is not attempted.
constexpr std::size_t kMaxExponent = std::size_t{1} << 16;

// Left-normed powers x^m for increasing m, stopping at the first zero.
class PowerWalk {
 public:
  PowerWalk(const AlgebraTable& a, Element x) : a_(a), x_(std::move(x)), value_(x_) {}

  const Element& at(std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "x^0 is undefined");
    if (m < exponent_) {
      exponent_ = 1;
      value_ = x_;
    }
    if (m > kMaxExponent && !is_zero(value_) && !r_nilpotency_index(a_, x_))
      throw Error(ErrorCode::PreconditionFailed,
                  "exponent " + std::to_string(m) + " is too large for an element "
                  "that is not r-nilpotent");
    while (exponent_ < m && !is_zero(value_)) {
      value_ = multiply(a_, value_, x_);
      ++exponent_;
    }
    if (is_zero(value_)) exponent_ = m;
    return value_;
  }

 private:
  const AlgebraTable& a_;
  Element x_;
  Element value_;
  std::size_t exponent_ = 1;
};

bool step_holds(const CertificateStep& s) {
  return s.target.contains(s.value) == s.expect_member;
}

CertificateStep make_step(StepKind kind, std::string relation, std::size_t exponent,
                          std::size_t level, Element value, Subspace target,
                          bool expect_member = true) {
  CertificateStep s{kind, std::move(relation), exponent, level, std::move(value), {},
                    std::move(target), expect_member};
  s.holds = step_holds(s);
  return s;
}

bool all_hold(const std::vector<CertificateStep>& steps) {
  for (const auto& s : steps)
    if (!s.holds) return false;
  return true;
}

Subspace zero_of(const AlgebraTable& a) { return Subspace::zero(a.field(), a.dim()); }

// Right powers I^[k], padded with zero once the chain has reached zero and
// with the fixed point once it has stabilized.
Subspace right_power(const ChainReport& c, std::size_t k, const AlgebraTable& a) {
  if (k == 0) return zero_of(a);
  if (k <= c.terms.size()) return c.terms[k - 1];
  return c.stabilized ? c.terms.back() : zero_of(a);
}

std::string power_name(std::size_t e) { return "x^" + std::to_string(e); }

Element quasi_identity(const AlgebraTable& a, const Element& x, const Element& y, Side side) {
  const Element product = side == Side::Left ? multiply(a, y, x) : multiply(a, x, y);
  return x + y - product;
}

Element lift_residual(const AlgebraTable& a, const Element& x, const Element& y) {
  return -quasi_identity(a, x, y, Side::Left);
}

}  // namespace

void require_radical_preconditions(const AlgebraTable& a) {
  if (!is_novikov(a))
    throw Error(ErrorCode::PreconditionFailed, "algebra does not satisfy the Novikov identities");
  if (a.field().characteristic() == 2)
    throw Error(ErrorCode::CharTwoUnsupported,
                "radical computation relies on right nilpotency of [A,A], "
                "which needs characteristic other than 2");
  if (!chain(a, ChainKind::Lie).index)
    throw Error(ErrorCode::NotLieSolvable, "algebra is not Lie-solvable");
}

// ----------------------------------------------------------- nilradical

NilradicalRoute nilradical_route(const AlgebraTable& a) {
  const std::uint32_t p = a.field().characteristic();
  return (p == 0 || p > a.dim()) ? NilradicalRoute::TraceForm : NilradicalRoute::Frobenius;
}

Subspace nilradical_commutative(const AlgebraTable& a) {
  if (!is_commutative_associative(a))
    throw Error(ErrorCode::NotCommutativeAssociative,
                "nilradical needs a commutative associative algebra");
  const FieldSpec f = a.field();
  const std::size_t n = a.dim();
  if (n == 0) return zero_of(a);

  if (nilradical_route(a) == NilradicalRoute::Frobenius) {
    // x ↦ x^p is GF(p)-linear on a commutative algebra of characteristic p
    const std::size_t p = f.p;
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i)
      images.push_back(left_normed_power(a, a.basis_element(i), p));
    const Matrix frob = Matrix::from_columns(f, n, images);
    Matrix power = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) power = frob * power;
    return kernel(power);
  }

  // trace form on the unital hull U = F·1 ⊕ A; the unit is basis index 0
  const AlgebraTable u = adjoin_unit(a);
  std::vector<Scalar> trace_of_basis;  // trace(L_{f_m})
  for (std::size_t m = 0; m <= n; ++m) {
    Scalar t = Scalar::zero(f);
    for (std::size_t k = 0; k <= n; ++k) t += u.coefficient(m, k, k);
    trace_of_basis.push_back(t);
  }
  const auto trace = [&](const Element& z) {
    Scalar t = Scalar::zero(f);
    for (std::size_t m = 0; m <= n; ++m)
      if (!z[m].is_zero()) t += z[m] * trace_of_basis[m];
    return t;
  };
  Matrix gram(f, n + 1, n);  // gram(j, i) = trace(L_{e_i f_j})
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) gram(j, i) = trace(u.product(i + 1, j));
  return kernel(gram);
}

// --------------------------------------------------------------- radicals

namespace {

struct RadicalCore {
  Subspace commutator;
  Subspace radical;
  NilradicalRoute route;
};

RadicalCore commutative_quotient_route(const AlgebraTable& a) {
  require_radical_preconditions(a);
  const Subspace full = Subspace::full(a.field(), a.dim());
#ifdef NDEBUG
  const Subspace k = commutator_ideal(a, full, CheckMode::Trust);
#else
  const Subspace k = commutator_ideal(a, full, CheckMode::Verify);
#endif
  const Quotient q = quotient(a, k);
  const Subspace nil = nilradical_commutative(q.algebra);
  Subspace radical = q.preimage(nil);
  if (!is_ideal(a, radical))
    throw Error(ErrorCode::InternalInconsistency, "computed radical is not an ideal");
  return {k, std::move(radical), nilradical_route(q.algebra)};
}

std::string route_detail(NilradicalRoute r) {
  return r == NilradicalRoute::TraceForm ? "trace form of the unital hull"
                                         : "kernel of iterated Frobenius x -> x^p";
}

Element random_member(const Subspace& s, Rng& rng) {
  Element x = zero_vector(s.field(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Scalar c = random_scalar(s.field(), rng);
    if (!c.is_zero()) x = x + c * s.basis_vector(i);
  }
  return x;
}

Certificate rnil_certificate(const AlgebraTable& a, const Element& x, bool expect_nilpotent) {
  Certificate c{Claim::RNil, x};
  const Subspace zero = zero_of(a);
  if (expect_nilpotent) {
    const auto idx = r_nilpotency_index(a, x);
    const std::size_t e = idx.value_or(a.dim() + 1);
    c.steps.push_back(make_step(StepKind::Power, power_name(e) + " = 0", e, 0,
                                left_normed_power(a, x, e), zero));
  } else {
    const std::size_t e = a.dim() + 1;
    c.steps.push_back(make_step(StepKind::Power, power_name(e) + " != 0", e, 0,
                                left_normed_power(a, x, e), zero, false));
  }
  c.n = c.steps.front().exponent;
  c.holds = all_hold(c.steps);
  return c;
}

Certificate quasireg_certificate(const AlgebraTable& a, const Element& x, Side side) {
  Certificate c{Claim::Quasireg, x};
  c.side = side;
  const auto y = quasiregular_solve(a, x, side);
  if (!y) {
    c.holds = false;
    return c;
  }
  c.result = *y;
  c.steps.push_back(make_step(StepKind::QuasiIdentity,
                              side == Side::Left ? "x + y - y x = 0" : "x + y - x y = 0", 0,
                              0, quasi_identity(a, x, *y, side), zero_of(a)));
  c.holds = all_hold(c.steps);
  return c;
}

void require_witnesses(const std::vector<Certificate>& ws, const char* what) {
  for (const auto& w : ws)
    if (!w.holds) throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace

RadicalReport baer_radical(const AlgebraTable& a, const SamplingOptions& opts) {
  RadicalCore core = commutative_quotient_route(a);
  RadicalReport r{RadicalKind::Baer, core.radical, core.commutator,
                  "A/[A,A] nilradical preimage; nilradical via " + route_detail(core.route)};
  Rng rng(opts.seed);
  for (const auto& b : core.radical.basis_vectors())
    r.witnesses.push_back(rnil_certificate(a, b, true));
  for (std::size_t i = 0; i < opts.samples; ++i)
    r.witnesses.push_back(rnil_certificate(a, random_member(core.radical, rng), true));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const Element x = random_element(a, rng);
    if (!core.radical.contains(x)) r.witnesses.push_back(rnil_certificate(a, x, false));
  }
  require_witnesses(r.witnesses, "r-nilpotency sampling contradicts the computed radical");
  return r;
}

RadicalReport lqr_radical(const AlgebraTable& a, const SamplingOptions& opts) {
  RadicalCore core = commutative_quotient_route(a);
  RadicalReport r{RadicalKind::Lqr, core.radical, core.commutator,
                  "preimage of the Jacobson radical of A/[A,A]; in finite dimension that is "
                  "its nilradical, so this equals the baer radical (finite-dimensional "
                  "coincidence); nilradical via " +
                      route_detail(core.route)};
  Rng rng(opts.seed);
  for (const auto& b : core.radical.basis_vectors())
    r.witnesses.push_back(quasireg_certificate(a, b, Side::Left));
  for (std::size_t i = 0; i < opts.samples; ++i)
    r.witnesses.push_back(quasireg_certificate(a, random_member(core.radical, rng), Side::Left));
  require_witnesses(r.witnesses, "sampled radical element is not left-quasiregular");
  return r;
}

// --------------------------------------------------------- quasiregularity

std::optional<Element> quasiregular_solve(const AlgebraTable& a, const Element& x, Side side) {
  require_element(a, x);
  // left: y·x − y = x, i.e. (R_x − Id) y = x; right uses L_x
  const Side op_side = side == Side::Left ? Side::Right : Side::Left;
  const Matrix op = operator_matrix(a, x, op_side).matrix() - Matrix::identity(a.field(), a.dim());
  auto y = solve(op, x);
  if (y && !is_zero(quasi_identity(a, x, *y, side)))
    throw Error(ErrorCode::InternalInconsistency, "quasi-inverse fails its defining identity");
  return y;
}

std::optional<LiftResult> quasi_inverse_lift(const AlgebraTable& a, const Element& x) {
  require_element(a, x);
  require_radical_preconditions(a);
  const Subspace k = commutator_ideal(a, Subspace::full(a.field(), a.dim()));
  const ChainReport powers = chain(a, ChainKind::Right, k);
  if (!powers.index)
    throw Error(ErrorCode::InternalInconsistency, "[A,A] is not right-nilpotent");
  const Quotient q = quotient(a, k);
  const auto y_bar = quasiregular_solve(q.algebra, q.project(x), Side::Left);
  if (!y_bar) return std::nullopt;

  LiftResult out;
  out.certificate.claim = Claim::Lifting;
  out.certificate.x = x;
  out.certificate.ideal = k;
  Element y = q.lift(*y_bar);
  std::size_t last_level = 0;
  while (true) {
    const Element v = lift_residual(a, x, y);
    if (is_zero(v)) break;
    std::size_t level = 0;
    for (std::size_t lvl = powers.terms.size(); lvl >= 1; --lvl)
      if (powers.terms[lvl - 1].contains(v)) {
        level = lvl;
        break;
      }
    CertificateStep step = make_step(StepKind::LiftResidual,
                                     "v in [A,A]^[" + std::to_string(level) + "]", 0, level, v,
                                     right_power(powers, level, a));
    step.iterate = y;
    step.holds = step.holds && level > last_level;
    out.certificate.steps.push_back(std::move(step));
    if (!out.certificate.steps.back().holds || out.iterations >= *powers.index)
      throw Error(ErrorCode::InternalInconsistency,
                  "lifting residual did not descend the right powers of [A,A]");
    last_level = level;
    y = y + v - multiply(a, v, y) + associator(a, v, y, y);
    ++out.iterations;
  }
  out.y = y;
  out.certificate.result = y;
  out.certificate.n = out.iterations;
  out.certificate.steps.push_back(make_step(StepKind::QuasiIdentity, "x + y - y x = 0", 0, 0,
                                            quasi_identity(a, x, y, Side::Left), zero_of(a)));
  out.certificate.holds = all_hold(out.certificate.steps);
  return out;
}

// ------------------------------------------------------ bound certificates

std::vector<std::size_t> s_sequence(std::size_t n, std::size_t count) {
  std::vector<std::size_t> s;
  if (count == 0) return s;
  s.push_back(n);
  while (s.size() < count) s.push_back(2 * s.back() + 2);
  return s;
}

Certificate bound_certificate(const AlgebraTable& a, Claim claim, const Element& x,
                              std::size_t n, const std::optional<Subspace>& ideal) {
  require_element(a, x);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  Certificate c{claim, x};
  c.n = n;
  PowerWalk pw(a, x);
  const Subspace zero = zero_of(a);

  switch (claim) {
    case Claim::Lemma1: {
      const Element xn = pw.at(n);
      const Element xn1 = pw.at(n + 1);
      c.steps.push_back(make_step(StepKind::PowerSquare, "(x^n)^2 = 0", n, 0,
                                  multiply(a, xn, xn), zero));
      c.steps.push_back(make_step(StepKind::PowerSquare, "(x^{n+1})^2 = 0", n + 1, 0,
                                  multiply(a, xn1, xn1), zero));
      if (!c.steps[0].holds || !c.steps[1].holds)
        throw Error(ErrorCode::PreconditionFailed,
                    "lemma1 needs (x^n)^2 = 0 and (x^{n+1})^2 = 0");
      c.steps.push_back(make_step(StepKind::Power, power_name(2 * n + 2) + " = 0", 2 * n + 2,
                                  0, pw.at(2 * n + 2), zero));
      break;
    }
    case Claim::Lemma3:
    case Claim::Theorem1: {
      if (!ideal) throw Error(ErrorCode::InvalidArgument, to_string(claim) + " needs an ideal");
      if (!is_ideal(a, *ideal))
        throw Error(ErrorCode::NotAnIdeal, to_string(claim) + " needs I to be an ideal");
      c.ideal = *ideal;
      c.steps.push_back(make_step(StepKind::Power, "x^n in I", n, 1, pw.at(n), *ideal));
      if (!c.steps[0].holds)
        throw Error(ErrorCode::PreconditionFailed, "x^n is not in I");
      if (claim == Claim::Lemma3) {
        c.steps.push_back(make_step(StepKind::Power, power_name(2 * n + 2) + " in I^2",
                                    2 * n + 2, 2, pw.at(2 * n + 2),
                                    subspace_product(a, *ideal, *ideal)));
        break;
      }
      const ChainReport powers = chain(a, ChainKind::Right, *ideal);
      c.s_sequence = {n};
      for (std::size_t k = 2;; ++k) {
        const std::size_t s = 2 * c.s_sequence.back() + 2;
        c.s_sequence.push_back(s);
        const Subspace target = right_power(powers, k, a);
        c.steps.push_back(make_step(StepKind::Power,
                                    power_name(s) + " in I^[" + std::to_string(k) + "]", s, k,
                                    pw.at(s), target));
        const bool reached_zero = target.is_zero();
        const bool past_fixed_point = powers.stabilized && k >= powers.terms.size();
        if (reached_zero || past_fixed_point) break;
      }
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "bound certificates cover lemma1, lemma3 and theorem1 only");
  }
  c.holds = all_hold(c.steps);
  return c;
}

// ------------------------------------------------------------------ recheck

bool recheck(const AlgebraTable& a, const Certificate& cert) {
  const Subspace zero = zero_of(a);
  std::optional<ChainReport> ideal_powers;
  std::optional<ChainReport> commutator_powers;
  PowerWalk pw(a, cert.x);
  std::size_t last_level = 0;
  bool all = true;

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& s = cert.steps[i];
    Element value;
    switch (s.kind) {
      case StepKind::Power: value = pw.at(s.exponent); break;
      case StepKind::PowerSquare: {
        const Element p = pw.at(s.exponent);
        value = multiply(a, p, p);
        break;
      }
      case StepKind::LiftResidual: {
        value = lift_residual(a, cert.x, s.iterate);
        // each iterate must be the update of the previous one
        if (i > 0) {
          const CertificateStep& prev = cert.steps[i - 1];
          const Element& py = prev.iterate;
          const Element& pv = prev.value;
          if (!(s.iterate == py + pv - multiply(a, pv, py) + associator(a, pv, py, py)))
            return false;
        }
        break;
      }
      case StepKind::QuasiIdentity: value = quasi_identity(a, cert.x, cert.result, cert.side); break;
    }
    if (!(value == s.value)) return false;

    Subspace target = zero;
    switch (cert.claim) {
      case Claim::Lemma3:
        if (!cert.ideal) return false;
        target = s.level == 1 ? *cert.ideal : subspace_product(a, *cert.ideal, *cert.ideal);
        break;
      case Claim::Theorem1:
        if (!cert.ideal) return false;
        if (!ideal_powers) ideal_powers = chain(a, ChainKind::Right, *cert.ideal);
        target = right_power(*ideal_powers, s.level, a);
        break;
      case Claim::Lifting:
        if (s.kind == StepKind::LiftResidual) {
          if (!commutator_powers)
            commutator_powers = chain(a, ChainKind::Right,
                                      commutator_ideal(a, Subspace::full(a.field(), a.dim())));
          target = right_power(*commutator_powers, s.level, a);
        }
        break;
      default: break;
    }
    if (!(target == s.target)) return false;
    bool holds = target.contains(value) == s.expect_member;
    if (cert.claim == Claim::Lifting && s.kind == StepKind::LiftResidual) {
      holds = holds && s.level > last_level;
      last_level = s.level;
    }
    if (holds != s.holds) return false;
    all = all && holds;
  }
  if (all != cert.holds) return false;
  if (cert.claim == Claim::Lifting) {
    // the final quasi-identity must follow the last residual's update
    if (cert.steps.empty() || cert.steps.back().kind != StepKind::QuasiIdentity) return false;
    if (cert.steps.size() >= 2) {
      const CertificateStep& last = cert.steps[cert.steps.size() - 2];
      const Element expected = last.iterate + last.value - multiply(a, last.value, last.iterate) +
                               associator(a, last.value, last.iterate, last.iterate);
      if (!(expected == cert.result)) return false;
    }
  }
  return cert.holds;
}

}  // namespace novikov
