#pragma once

#include <string>
#include <variant>

#include "superosc/errors.hpp"
#include "superosc/rational.hpp"
#include "superosc/real.hpp"

namespace superosc {

enum class Mode { Exact, Float };

/// Dual-backend scalar: an exact rational or a correctly rounded MPFR float.
/// Arithmetic requires both operands in the same mode; mixing raises
/// Error("MixedMode") rather than coercing. Exact results never round.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)
  Scalar(Real r) : v_(std::move(r)) {}      // NOLINT(google-explicit-constructor)

  Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  const Rational& rational() const {
    if (!is_exact()) fail("UnsupportedMode", "float-mode scalar has no exact rational value");
    return std::get<Rational>(v_);
  }
  const Real& real() const {
    if (is_exact()) fail("UnsupportedMode", "exact-mode scalar has no float value");
    return std::get<Real>(v_);
  }
  /// Precision in bits (float mode only).
  long precision() const { return real().precision(); }

  /// Float value at the given precision: exact values are correctly rounded
  /// once, float values re-rounded.
  Real to_real(long prec) const {
    return is_exact() ? Real::from_rational(rational(), prec) : real().at(prec);
  }

  bool is_zero() const {
    return is_exact() ? rational().is_zero() : std::get<Real>(v_).is_zero();
  }
  int sgn() const { return is_exact() ? rational().sgn() : std::get<Real>(v_).sgn(); }
  Scalar abs() const {
    return is_exact() ? Scalar(rational().abs()) : Scalar(std::get<Real>(v_).abs());
  }
  /// Integer power; 0^0 = 1 in both modes.
  Scalar pow(long e) const {
    return is_exact() ? Scalar(rational().pow(e)) : Scalar(std::get<Real>(v_).pow(e));
  }

  std::string str(int float_digits = 30) const {
    return is_exact() ? rational().str() : std::get<Real>(v_).str(float_digits);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const {
    return is_exact() ? Scalar(-rational()) : Scalar(-std::get<Real>(v_));
  }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

 private:
  std::variant<Rational, Real> v_;
};

/// Complex value over Scalar; real and imaginary parts always share one mode
/// (and, in float mode, one precision — parts are widened on construction).
class ComplexScalar {
 public:
  ComplexScalar() = default;
  ComplexScalar(Scalar re, Scalar im);
  /// Purely real value; the imaginary part is a zero of matching mode.
  explicit ComplexScalar(Scalar re);

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }
  Mode mode() const { return re_.mode(); }
  bool is_exact() const { return re_.is_exact(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2; exactly representable in exact mode.
  Scalar norm() const { return re_ * re_ + im_ * im_; }
  /// Modulus. Float mode: correctly rounded hypot. Exact mode: only defined
  /// when the value lies on an axis (else the modulus is irrational).
  Scalar abs() const;

  std::string str(int float_digits = 30) const {
    return "(" + re_.str(float_digits) + ", " + im_.str(float_digits) + ")";
  }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexScalar operator*(const Scalar& s, const ComplexScalar& z) {
    return {s * z.re_, s * z.im_};
  }
  friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) {
    Scalar n = b.norm();
    if (n.is_zero()) fail("DivisionByZero", "complex division by zero");
    ComplexScalar t = a * b.conj();
    return {t.re_ / n, t.im_ / n};
  }
  ComplexScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ComplexScalar& a, const ComplexScalar& b) { return !(a == b); }

 private:
  Scalar re_;
  Scalar im_;
};

/// z * i^p without any arithmetic rounding (component swap and negation).
ComplexScalar mul_i_power(const ComplexScalar& z, long p);

/// e^z for a float-mode z, relative error within 4 ulp per component at the
/// requested precision. Exact-mode input raises Error("UnsupportedMode"):
/// exponentials are not rational.
ComplexScalar complex_exp(const ComplexScalar& z, long bits);

/// Correctly rounded float of an exact scalar at the given precision.
Scalar to_float(const Scalar& s, long bits);

/// Working-precision rule shared by every evaluation routine. Coefficient
/// sums in the superoscillatory regime cancel down from magnitude l1 to
/// magnitude ~1, so the working precision must grow with log2(l1) or the
/// cancellation silently destroys all significant digits.
struct PrecisionPolicy {
  long base_bits = 128;
  long guard_bits = 32;

  /// ceil(log2(1 + l1)): bits lost to cancellation against a coefficient
  /// 1-norm bound l1 (either mode, l1 >= 0).
  static long cancellation_bits(const Scalar& l1_bound);

  /// Working precision for a request of `requested` output bits:
  /// requested + cancellation + 16, floored at base_bits + guard_bits.
  long working_bits(long requested, const Scalar& l1_bound) const;

  /// Smallest acceptable request for this coefficient magnitude; below it the
  /// evaluation routines raise Error("PrecisionInsufficient").
  long min_request_bits(const Scalar& l1_bound) const;
};

}  // namespace superosc
