#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

#include "superosc/rational.hpp"

namespace superosc {

/// Arbitrary-precision binary float backed by MPFR, round-to-nearest
/// throughout. Every value carries its own precision; binary operations
/// round into max(precision of the operands), so each operation is correctly
/// rounded at the wider operand's precision.
class Real {
 public:
  static constexpr long min_precision = MPFR_PREC_MIN;

  /// Zero at the given precision.
  explicit Real(long prec) {
    check_precision(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Correctly rounded conversion of an exact rational.
  static Real from_rational(const Rational& q, long prec);
  static Real from_long(long n, long prec);
  /// Reads a decimal string ("1.5e-3"); correctly rounded at prec.
  static Real from_decimal(std::string_view text, long prec);

  long precision() const { return mpfr_get_prec(v_); }
  /// Re-rounds to the given precision (exact when widening).
  Real at(long prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  Real abs() const;
  Real operator-() const;
  /// Integer power; 0^0 = 1.
  Real pow(long e) const;
  /// Exact scaling by 2^e.
  Real ldexp(long e) const;
  /// Binary exponent b with |value| in [2^(b-1), 2^b); value must be a
  /// nonzero finite number.
  long exponent() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal form with the given number of significant digits.
  std::string str(int significant_digits = 30) const;

  friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) fail("DivisionByZero", "float division by zero");
    return binop(mpfr_div, a, b);
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x, long prec);
  friend Real hypot(const Real& x, const Real& y);
  /// Correctly rounded sin and cos of x at the given precision.
  friend std::pair<Real, Real> sin_cos(const Real& x, long prec);

 private:
  static void check_precision(long prec) {
    if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
      fail("InvalidPrecision", "precision out of range: " + std::to_string(prec));
    }
  }

  using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(mpfr_binop op, const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace superosc
