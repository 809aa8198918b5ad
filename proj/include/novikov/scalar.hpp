#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace novikov {

/// The base field: the rationals or a prime field GF(p).
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t p = 0;  // modulus when kind == Prime

  static FieldSpec rational() { return {}; }
  /// Throws InvalidArgument unless p is prime.
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return is_rational() ? 0 : p; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// An element of the field named by its FieldSpec. Rationals are kept in
/// lowest terms (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(FieldSpec field, long value);
  /// Reduces mod p for prime fields; throws DivisionByZero if the
  /// denominator is not invertible there.
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; for prime fields the residue as an integer.
  mpq_class to_rational() const;
  std::int64_t residue() const { return residue_; }

  /// "p/q", "n", or the residue.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_field(const Scalar& rhs) const;

  FieldSpec field_;
  mpq_class rational_;       // used when field_ is rational
  std::int64_t residue_ = 0;  // used when field_ is prime
};

}  // namespace novikov
