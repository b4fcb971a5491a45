#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "superosc/errors.hpp"

namespace superosc {

/// Arbitrary-precision rational. All arithmetic is exact; values are kept in
/// canonical form (reduced, positive denominator) so equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "p/q", or a finite decimal string ("-3.25", "1e3", "2.5e-2").
  /// Returns nullopt on malformed input or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sgn() const { return ::sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Exact integer power; 0^0 = 1 by convention (the p = 0 moment row must
  /// read as a sum of ones even when a node is 0).
  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }

  /// Canonical lossless form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail("DivisionByZero", "rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

/// Smallest integer k with q <= 2^k, computed exactly. Requires q > 0.
long ceil_log2(const Rational& q);

/// Smallest integer k with 10^digits <= 2^k, computed exactly (digits >= 0).
long ceil_log2_pow10(long digits);

}  // namespace superosc
