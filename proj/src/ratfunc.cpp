#include "novikov/ratfunc.hpp"

#include "novikov/error.hpp"

namespace novikov {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Poly Poly::monomial(const mpq_class& c, std::size_t k) {
  std::vector<mpq_class> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (is_zero()) return std::nullopt;
  return c_.size() - 1;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  std::vector<mpq_class> v = c_;
  const mpq_class lc = leading();
  for (auto& q : v) q /= lc;
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& q = c_[i];
    if (q == 0) continue;
    const bool negative = q < 0;
    const mpq_class mag = negative ? mpq_class(-q) : q;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
  std::vector<mpq_class> v = a.c_;
  for (auto& q : v) q = -q;
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly q, r = a;
  const std::size_t db = *b.degree();
  const mpq_class lb = b.leading();
  while (!r.is_zero() && *r.degree() >= db) {
    const Poly t = Poly::monomial(r.leading() / lb, *r.degree() - db);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  num = divmod(num, g).quotient;
  den = divmod(den, g).quotient;
  const mpq_class lc = den.leading();
  num_ = num * Poly::constant(1 / lc);
  den_ = den * Poly::constant(1 / lc);
}

bool RatFunc::in_b() const { return num_.at_zero() == 0 && den_.at_zero() != 0; }

std::string RatFunc::to_string() const {
  if (den_ == Poly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

// ------------------------------------------- right quasi-inverse residual

namespace {

void require_in_b(const RatFunc& u, const char* what) {
  if (!u.in_b())
    throw Error(ErrorCode::NotInDomain,
                std::string(what) + ": " + u.to_string() + " is not of the form f/g with "
                "f(0) = 0 and g(0) != 0");
}

}  // namespace

RatFunc rf_derivation(const RatFunc& u) {
  require_in_b(u, "derivation");
  const Poly& f = u.num();
  const Poly& g = u.den();
  return RatFunc(Poly::x() * (f.derivative() * g - f * g.derivative()), g * g);
}

RatFunc gd_product_rf(const RatFunc& u, const RatFunc& v) {
  require_in_b(u, "left factor");
  return u * rf_derivation(v);
}

RatFunc gd_power_rf(const RatFunc& u, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "left-normed power u^0 is undefined");
  require_in_b(u, "power");
  const RatFunc du = rf_derivation(u);
  RatFunc p = u;
  for (std::size_t i = 1; i < k; ++i) p = p * du;
  return p;
}

RatFunc left_quasi_inverse_rf(const RatFunc& u) {
  require_in_b(u, "left quasi-inverse");
  const RatFunc w = rf_derivation(u);
  // w(0) = 0, so w − 1 is invertible in the local ring and z lies in B
  const RatFunc z = w / (w - RatFunc(Poly::constant(1)));
  const RatFunc y = u * z - u;
  if (!(u + y - gd_product_rf(y, u)).is_zero())
    throw Error(ErrorCode::InternalInconsistency, "left quasi-inverse fails u + y - y o u = 0");
  return y;
}

std::string to_string(ResidualCase c) {
  switch (c) {
    case ResidualCase::MGreater: return "m>n";
    case ResidualCase::NGreater: return "n>m";
    case ResidualCase::Equal: return "n=m";
  }
  return "unknown";
}

ResidualResult right_qr_residual(const Poly& f, const Poly& g) {
  if (f.is_zero() || f.at_zero() != 0 || g.is_zero() || g.at_zero() == 0)
    throw Error(ErrorCode::PreconditionFailed,
                "residual needs f != 0, f(0) = 0 and g(0) != 0");
  const Poly x = Poly::x();
  const Poly r = x * g * g + f * g - x * x * (f.derivative() * g - f * g.derivative());

  CaseReport rep;
  rep.n = *f.degree();
  rep.m = *g.degree();
  const mpq_class alpha = f.leading();
  const mpq_class beta = g.leading();
  if (rep.n > rep.m) {
    rep.which = ResidualCase::NGreater;
    rep.predicted_degree = rep.n + rep.m + 1;
    rep.predicted_coefficient = -mpq_class(static_cast<long>(rep.n - rep.m)) * alpha * beta;
  } else {
    rep.which = rep.m > rep.n ? ResidualCase::MGreater : ResidualCase::Equal;
    rep.predicted_degree = 2 * rep.m + 1;
    rep.predicted_coefficient = beta * beta;
  }
  rep.actual_degree = r.degree();
  rep.actual_coefficient = r.leading();
  rep.nonzero = !r.is_zero();
  rep.matches = rep.actual_degree == rep.predicted_degree &&
                rep.actual_coefficient == rep.predicted_coefficient;
  return {r, rep};
}

}  // namespace novikov
