#include "novikov/scalar.hpp"

#include "novikov/error.hpp"

namespace novikov {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotAnIdeal: return "NOT_AN_IDEAL";
    case ErrorCode::NotLieSolvable: return "NOT_LIE_SOLVABLE";
    case ErrorCode::CharTwoUnsupported: return "CHAR_TWO_UNSUPPORTED";
    case ErrorCode::NotCommutativeAssociative: return "NOT_COMMUTATIVE_ASSOCIATIVE";
    case ErrorCode::NotADerivation: return "NOT_A_DERIVATION";
    case ErrorCode::NotInDomain: return "NOT_IN_DOMAIN";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
  }
  return "UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "modulus " + std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "gf(" + std::to_string(p) + ")";
}

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // extended Euclid; a is nonzero mod p
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t, p);
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational())
    rational_ = value;
  else
    residue_ = reduce(static_cast<std::int64_t>(value), field_.p);
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
    return;
  }
  const std::int64_t den = reduce_mpz(value.get_den(), field_.p);
  if (den == 0)
    throw Error(ErrorCode::DivisionByZero,
                "denominator of " + value.get_str() + " vanishes in " +
                    field_.to_string());
  const std::int64_t num = reduce_mpz(value.get_num(), field_.p);
  residue_ = reduce(num * inverse_mod(den, field_.p), field_.p);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

mpq_class Scalar::to_rational() const {
  return field_.is_rational() ? rational_ : mpq_class(residue_);
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

void Scalar::check_field(const Scalar& rhs) const {
  if (field_ != rhs.field_)
    throw Error(ErrorCode::FieldMismatch, "scalars from " + field_.to_string() +
                                              " and " + rhs.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.is_rational())
    rational_ += rhs.rational_;
  else
    residue_ = reduce(residue_ + rhs.residue_, field_.p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.is_rational())
    rational_ -= rhs.rational_;
  else
    residue_ = reduce(residue_ - rhs.residue_, field_.p);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.is_rational())
    rational_ *= rhs.rational_;
  else
    residue_ = reduce(residue_ * rhs.residue_, field_.p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = -rational_;
  else
    out.residue_ = reduce(-residue_, field_.p);
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = 1 / rational_;
  else
    out.residue_ = inverse_mod(residue_, field_.p);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_
                                : a.residue_ == b.residue_;
}

}  // namespace novikov
