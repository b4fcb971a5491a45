#include "superosc/real.hpp"

#include <algorithm>

namespace superosc {

Real Real::from_rational(const Rational& q, long prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_long(long n, long prec) {
  Real r(prec);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

Real Real::from_decimal(std::string_view text, long prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, std::string(text).c_str(), 10, MPFR_RNDN) != 0) {
    fail("InvalidArgument", "not a decimal number: " + std::string(text));
  }
  return r;
}

Real Real::at(long prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::pow(long e) const {
  Real r(precision());
  if (e < 0 && is_zero()) fail("DivisionByZero", "zero raised to a negative power");
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

Real Real::ldexp(long e) const {
  Real r(precision());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (is_zero() || !is_finite()) {
    fail("InvalidArgument", "exponent of zero or non-finite value");
  }
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::str(int significant_digits) const {
  if (significant_digits < 1) {
    fail("InvalidArgument", "str requires at least one significant digit");
  }
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", significant_digits, v_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real sqrt(const Real& x) {
  if (x.sgn() < 0) fail("InvalidArgument", "sqrt of a negative value");
  Real r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x, long prec) {
  Real r(prec);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

std::pair<Real, Real> sin_cos(const Real& x, long prec) {
  Real s(prec);
  Real c(prec);
  mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

}  // namespace superosc
