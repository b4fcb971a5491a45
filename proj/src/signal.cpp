#include "superosc/signal.hpp"

#include <sstream>
#include <utility>

namespace superosc {

std::string signal_kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::NewMethod: return "new-method";
    case SignalKind::ClassicFn: return "classic-fn";
    case SignalKind::ClassicYn: return "classic-yn";
  }
  fail("InvalidArgument", "unknown signal kind");
}

std::optional<SignalKind> signal_kind_from_name(std::string_view name) {
  if (name == "new-method" || name == "new") return SignalKind::NewMethod;
  if (name == "classic-fn" || name == "classic") return SignalKind::ClassicFn;
  if (name == "classic-yn") return SignalKind::ClassicYn;
  return std::nullopt;
}

SignalSpec::SignalSpec(CoefficientSet coeffs, SignalKind kind, int yn_exponent)
    : coeffs_(std::move(coeffs)),
      kind_(kind),
      yn_exponent_(kind == SignalKind::ClassicYn ? yn_exponent : 1),
      target_(coeffs_.target_a()),
      l1_(l1_norm(coeffs_)) {
  if (kind_ != SignalKind::NewMethod && coeffs_.grid().family() != GridFamily::UniformLinear) {
    fail("InvalidArgument", "classic signals are defined on the uniform grid only");
  }
  if (kind_ == SignalKind::ClassicYn && yn_exponent_ < 1) {
    fail("InvalidArgument", "frequency-map exponent must be >= 1");
  }
  freqs_.reserve(coeffs_.grid().nodes().size());
  for (const Scalar& h : coeffs_.grid().nodes()) {
    freqs_.push_back(kind_ == SignalKind::ClassicYn ? h.pow(yn_exponent_) : h);
  }
  if (kind_ == SignalKind::ClassicYn) target_ = target_.pow(yn_exponent_);
}

SignalSpec SignalSpec::new_method(const FrequencyGrid& grid, const Scalar& a) {
  return SignalSpec(closed_form_coefficients(grid, a), SignalKind::NewMethod);
}

SignalSpec SignalSpec::classic_fn(int n, const Scalar& a) {
  return SignalSpec(binomial_coefficients(n, a), SignalKind::ClassicFn);
}

SignalSpec SignalSpec::classic_yn(int n, const Scalar& a, int m) {
  return SignalSpec(binomial_coefficients(n, a), SignalKind::ClassicYn, m);
}

namespace {

bool exact_inputs(const SignalSpec& sig, const Scalar& x) {
  return x.is_exact() && sig.coefficients().mode() == Mode::Exact;
}

/// p-th moment sum_j c_j w_j^p of an exact signal, exact.
Rational exact_moment(const SignalSpec& sig, long p) {
  Rational acc(0);
  for (size_t j = 0; j < sig.frequencies().size(); ++j) {
    acc += sig.coefficients().values()[j].rational() * sig.frequencies()[j].rational().pow(p);
  }
  return acc;
}

void check_request(const SignalSpec& sig, long bits, const PrecisionPolicy& policy) {
  long min_bits = policy.min_request_bits(sig.coefficient_l1());
  if (bits < min_bits) {
    fail("PrecisionInsufficient",
         "requested " + std::to_string(bits) + " bits, but coefficients of this magnitude need at least " +
             std::to_string(min_bits));
  }
}

/// f^{(p)}(x) without the i^p factor, at working precision w:
/// sum_j c_j w_j^p e^{i w_j x}.
ComplexScalar eval_working(const SignalSpec& sig, long p, const Scalar& x, long w) {
  ComplexScalar acc(Scalar(Real(w)), Scalar(Real(w)));
  const auto& coeffs = sig.coefficients().values();
  const auto& freqs = sig.frequencies();
  for (size_t j = 0; j < freqs.size(); ++j) {
    Real theta = (freqs[j].is_exact() && x.is_exact())
                     ? (freqs[j] * x).to_real(w)
                     : freqs[j].to_real(w) * x.to_real(w);
    ComplexScalar phase = complex_exp(ComplexScalar(Scalar(Real(w)), Scalar(theta)), w);
    Real weight = coeffs[j].to_real(w);
    if (p > 0) weight = weight * freqs[j].pow(p).to_real(w);
    acc = acc + Scalar(weight) * phase;
  }
  return acc;
}

ComplexScalar round_to(const ComplexScalar& z, long bits) {
  return {Scalar(z.re().real().at(bits)), Scalar(z.im().real().at(bits))};
}

}  // namespace

ComplexScalar eval(const SignalSpec& sig, const Scalar& x, long bits,
                   const PrecisionPolicy& policy) {
  return eval_derivative(sig, 0, x, bits, policy);
}

ComplexScalar eval_derivative(const SignalSpec& sig, long p, const Scalar& x, long bits,
                              const PrecisionPolicy& policy) {
  if (p < 0) fail("InvalidArgument", "derivative order must be >= 0");
  if (exact_inputs(sig, x) && x.is_zero()) {
    // f^{(p)}(0) = i^p sum_j c_j w_j^p, a finite exact sum.
    return mul_i_power(ComplexScalar(Scalar(exact_moment(sig, p))), p);
  }
  check_request(sig, bits, policy);
  long w = policy.working_bits(bits, sig.coefficient_l1());
  return round_to(mul_i_power(eval_working(sig, p, x, w), p), bits);
}

TaylorReport taylor_check(const SignalSpec& sig) {
  if (sig.coefficients().mode() != Mode::Exact) {
    fail("UnsupportedMode", "taylor_check requires exact-mode coefficients");
  }
  const long n = sig.n();
  const Rational target = sig.target_exponent().rational();
  TaylorReport report;
  report.n = static_cast<int>(n);
  report.residuals.reserve(static_cast<size_t>(n) + 1);
  Rational max_abs(0);
  bool exact = true;
  for (long p = 0; p <= n; ++p) {
    // f^{(p)}(0) - (i t)^p = i^p (m_p - t^p), purely axis-aligned.
    Rational diff = exact_moment(sig, p) - target.pow(p);
    report.residuals.push_back(mul_i_power(ComplexScalar(Scalar(diff)), p));
    if (!diff.is_zero()) exact = false;
    if (diff.abs() > max_abs) max_abs = diff.abs();
  }
  report.max_abs = Scalar(max_abs);
  report.exact = exact;
  return report;
}

Scalar error_vs_limit(const SignalSpec& sig, const Scalar& x, const Scalar& limit_exponent,
                      long bits, const PrecisionPolicy& policy) {
  if (exact_inputs(sig, x) && x.is_zero() && limit_exponent.is_exact()) {
    return Scalar((exact_moment(sig, 0) - Rational(1)).abs());
  }
  check_request(sig, bits, policy);
  long w = policy.working_bits(bits, sig.coefficient_l1());
  ComplexScalar f = eval_working(sig, 0, x, w);
  Real theta = (limit_exponent.is_exact() && x.is_exact())
                   ? (limit_exponent * x).to_real(w)
                   : limit_exponent.to_real(w) * x.to_real(w);
  ComplexScalar limit = complex_exp(ComplexScalar(Scalar(Real(w)), Scalar(theta)), w);
  ComplexScalar diff = f - limit;
  return Scalar(hypot(diff.re().real(), diff.im().real()).at(bits));
}

Scalar local_frequency(const SignalSpec& sig, const Scalar& x, long bits,
                       const PrecisionPolicy& policy) {
  if (exact_inputs(sig, x) && x.is_zero()) {
    Rational f0 = exact_moment(sig, 0);
    if (f0.is_zero()) fail("NearZeroSignal", "signal vanishes at x = 0");
    // Im(f'(0)/f(0)) = m_1 / m_0 exactly.
    return Scalar(exact_moment(sig, 1) / f0);
  }
  check_request(sig, bits, policy);
  long w = policy.working_bits(bits, sig.coefficient_l1());
  ComplexScalar f = eval_working(sig, 0, x, w);
  ComplexScalar fp = mul_i_power(eval_working(sig, 1, x, w), 1);
  Real modulus = hypot(f.re().real(), f.im().real());
  if (modulus < Real::from_long(1, w).ldexp(-w / 2)) {
    fail("NearZeroSignal", "|f(x)| below 2^-(working/2); instantaneous frequency is undefined here");
  }
  Real numer = fp.im().real() * f.re().real() - fp.re().real() * f.im().real();
  return Scalar((numer / f.norm().real()).at(bits));
}

ComplexScalar classic_product_form(int n, const Scalar& a, const Scalar& x, long bits) {
  if (n < 1) fail("InvalidArgument", "classic product form needs n >= 1");
  if (bits < 8) fail("InvalidPrecision", "classic product form requires bits >= 8");
  long w = bits + 16;
  {
    long squarings = 1;
    while ((1 << squarings) < n) ++squarings;
    w += 2 * squarings;
  }
  Real arg = x.to_real(w) / Real::from_long(n, w);
  auto [s, c] = sin_cos(arg, w);
  ComplexScalar base(Scalar(c), Scalar(a.to_real(w) * s));
  // Binary exponentiation; each multiply is correctly rounded at w.
  ComplexScalar result(Scalar(Real::from_long(1, w)), Scalar(Real(w)));
  ComplexScalar power = base;
  for (unsigned long e = static_cast<unsigned long>(n); e > 0; e >>= 1) {
    if (e & 1) result = result * power;
    if (e > 1) power = power * power;
  }
  return {Scalar(result.re().real().at(bits)), Scalar(result.im().real().at(bits))};
}

std::string samples_to_csv(const std::vector<EvalSample>& samples) {
  std::ostringstream out;
  out << "n,x,re,im,abs_err,local_freq\n";
  for (const EvalSample& s : samples) {
    out << s.n << ',' << s.x.to_real(128).str(30) << ',' << s.re.str(30) << ',' << s.im.str(30)
        << ',' << s.abs_err.str(30) << ',';
    if (s.local_freq) out << s.local_freq->str(30);
    out << '\n';
  }
  return out.str();
}

}  // namespace superosc
