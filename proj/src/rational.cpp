#include "superosc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace superosc {

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long mag = invert ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) fail("DivisionByZero", "zero raised to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), mag);
  mpq_class r;
  if (invert) {
    r = mpq_class(den, num);
  } else {
    r = mpq_class(num, den);
  }
  r.canonicalize();
  return Rational(std::move(r));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// "[+-]?ddd[.ddd][(e|E)[+-]ddd]" -> exact rational, nullopt on anything else.
std::optional<Rational> parse_decimal(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exp10 = 0;
  if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view etext = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool eneg = false;
    if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
      eneg = etext.front() == '-';
      etext.remove_prefix(1);
    }
    if (!all_digits(etext) || etext.size() > 9) return std::nullopt;
    exp10 = std::strtol(std::string(etext).c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  std::string digits;
  digits.reserve(int_part.size() + frac_part.size());
  digits.append(int_part);
  digits.append(frac_part);
  if (digits.empty()) return std::nullopt;

  mpz_class mantissa;
  if (mantissa.set_str(digits, 10) != 0) return std::nullopt;
  if (negative) mantissa = -mantissa;

  long shift = exp10 - static_cast<long>(frac_part.size());
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class value = shift < 0 ? mpq_class(mantissa, pow10) : mpq_class(mantissa * pow10);
  value.canonicalize();
  return Rational(std::move(value));
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_body = num;
    if (!num_body.empty() && (num_body.front() == '+' || num_body.front() == '-')) {
      num_body.remove_prefix(1);
    }
    if (!all_digits(num_body) || !all_digits(den)) return std::nullopt;
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) return std::nullopt;
    if (v.get_den() == 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
  }
  return parse_decimal(text);
}

long ceil_log2(const Rational& q) {
  if (q.sgn() <= 0) fail("InvalidArgument", "ceil_log2 requires a positive value");
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  // sizeinbase gives floor(log2)+1, so this k satisfies q <= 2^k.
  long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) + 1;
  auto le_pow2 = [&](long e) {
    // num/den <= 2^e, exactly.
    mpz_class lhs = num, rhs = den;
    if (e >= 0) {
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(e));
    } else {
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-e));
    }
    return lhs <= rhs;
  };
  while (!le_pow2(k)) ++k;
  while (le_pow2(k - 1)) --k;
  return k;
}

long ceil_log2_pow10(long digits) {
  if (digits < 0) fail("InvalidArgument", "ceil_log2_pow10 requires digits >= 0");
  if (digits == 0) return 0;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return ceil_log2(Rational(mpq_class(p)));
}

}  // namespace superosc
