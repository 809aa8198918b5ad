#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace novikov {

/// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c) { return Poly({c}); }
  static Poly x() { return Poly({0, 1}); }
  static Poly monomial(const mpq_class& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
  mpq_class leading() const { return is_zero() ? mpq_class(0) : c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class at_zero() const { return coeff(0); }

  Poly derivative() const;
  Poly monic() const;
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Throws DivisionByZero for a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// num/den in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(1)) {}
  /// Throws DivisionByZero when den is zero.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// f(0) = 0 and g(0) ≠ 0: membership in the algebra B.
  bool in_b() const;
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

/// d(f/g) = x(f'g − fg')/g². Throws NotInDomain unless u ∈ B.
RatFunc rf_derivation(const RatFunc& u);

/// u ∘ v = u·d(v) in GD(B, d).
RatFunc gd_product_rf(const RatFunc& u, const RatFunc& v);

/// Left-normed ∘-power u^k; k ≥ 1.
RatFunc gd_power_rf(const RatFunc& u, std::size_t k);

/// y = u z − u with z = w/(w − 1), w = d(u); verified to satisfy u + y − y∘u = 0.
RatFunc left_quasi_inverse_rf(const RatFunc& u);

enum class ResidualCase { MGreater, NGreater, Equal };

std::string to_string(ResidualCase c);

struct CaseReport {
  ResidualCase which;
  std::size_t n = 0;  // deg f
  std::size_t m = 0;  // deg g
  std::size_t predicted_degree = 0;
  mpq_class predicted_coefficient;
  std::optional<std::size_t> actual_degree;
  mpq_class actual_coefficient;
  bool matches = false;
  bool nonzero = false;
};

struct ResidualResult {
  Poly r;
  CaseReport report;
};

/// r = x g² + f g − x²(f'g − f g'); zero exactly when x + f/g = x∘(f/g).
/// Requires f ≠ 0, f(0) = 0, g(0) ≠ 0.
ResidualResult right_qr_residual(const Poly& f, const Poly& g);

}  // namespace novikov
