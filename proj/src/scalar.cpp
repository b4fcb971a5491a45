#include "superosc/scalar.hpp"

#include <algorithm>

namespace superosc {

namespace {

void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
  if (a.mode() != b.mode()) {
    fail("MixedMode", std::string("cannot ") + op +
                          " an exact value and a float value; convert explicitly");
  }
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "add");
  return a.is_exact() ? Scalar(a.rational() + b.rational()) : Scalar(a.real() + b.real());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "subtract");
  return a.is_exact() ? Scalar(a.rational() - b.rational()) : Scalar(a.real() - b.real());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "multiply");
  return a.is_exact() ? Scalar(a.rational() * b.rational()) : Scalar(a.real() * b.real());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "divide");
  return a.is_exact() ? Scalar(a.rational() / b.rational()) : Scalar(a.real() / b.real());
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "compare");
  return a.is_exact() ? a.rational() == b.rational() : a.real() == b.real();
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "compare");
  return a.is_exact() ? a.rational() < b.rational() : a.real() < b.real();
}

ComplexScalar::ComplexScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.mode() != im_.mode()) {
    fail("MixedMode", "complex value with mismatched real/imaginary modes");
  }
  if (!re_.is_exact() && re_.precision() != im_.precision()) {
    long prec = std::max(re_.precision(), im_.precision());
    re_ = Scalar(re_.real().at(prec));
    im_ = Scalar(im_.real().at(prec));
  }
}

ComplexScalar::ComplexScalar(Scalar re)
    : ComplexScalar(re, re.is_exact() ? Scalar(Rational(0)) : Scalar(Real(re.precision()))) {}

Scalar ComplexScalar::abs() const {
  if (!is_exact()) return Scalar(hypot(re_.real(), im_.real()));
  if (im_.is_zero()) return re_.abs();
  if (re_.is_zero()) return im_.abs();
  fail("UnsupportedMode", "exact modulus of a complex value off the axes is irrational");
}

ComplexScalar mul_i_power(const ComplexScalar& z, long p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im(), z.re()};
    case 2: return -z;
    default: return {z.im(), -z.re()};
  }
}

ComplexScalar complex_exp(const ComplexScalar& z, long bits) {
  if (z.mode() != Mode::Float) {
    fail("UnsupportedMode", "complex_exp requires float-mode input; exponentials are not rational");
  }
  if (bits < 8) fail("InvalidPrecision", "complex_exp requires bits >= 8");
  Real magnitude = exp(z.re().real(), bits);
  auto [s, c] = sin_cos(z.im().real(), bits);
  return {Scalar(magnitude * c), Scalar(magnitude * s)};
}

Scalar to_float(const Scalar& s, long bits) {
  if (!s.is_exact()) fail("UnsupportedMode", "to_float takes an exact-mode scalar");
  if (bits < 2) fail("InvalidPrecision", "to_float requires bits >= 2");
  return Scalar(Real::from_rational(s.rational(), bits));
}

long PrecisionPolicy::cancellation_bits(const Scalar& l1_bound) {
  if (l1_bound.sgn() < 0) fail("InvalidArgument", "coefficient 1-norm bound must be >= 0");
  if (l1_bound.is_exact()) {
    return ceil_log2(Rational(1) + l1_bound.rational());
  }
  if (l1_bound.is_zero()) return 1;
  // 1 + l1 <= 2^(max(exponent, 1)); exponent() bounds l1 by 2^exponent.
  return std::max(l1_bound.real().exponent(), 0L) + 1;
}

long PrecisionPolicy::working_bits(long requested, const Scalar& l1_bound) const {
  return std::max(requested + cancellation_bits(l1_bound) + 16, base_bits + guard_bits);
}

long PrecisionPolicy::min_request_bits(const Scalar& l1_bound) const {
  return std::max(8L, cancellation_bits(l1_bound) + 16);
}

}  // namespace superosc
