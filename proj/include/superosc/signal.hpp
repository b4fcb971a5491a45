#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superosc/coefficients.hpp"

namespace superosc {

enum class SignalKind { NewMethod, ClassicFn, ClassicYn };

std::string signal_kind_name(SignalKind kind);
std::optional<SignalKind> signal_kind_from_name(std::string_view name);

/// A finite exponential sum f(x) = sum_j c_j e^{i w_j x}, where the effective
/// frequencies w_j are the grid nodes (NewMethod, ClassicFn) or their m-th
/// powers (ClassicYn). NewMethod carries Taylor-matched coefficients on any
/// grid; the classic kinds carry binomial coefficients on the uniform grid.
class SignalSpec {
 public:
  /// Taylor-matched signal on an arbitrary grid (closed-form coefficients).
  static SignalSpec new_method(const FrequencyGrid& grid, const Scalar& a);
  /// Classic prototype F_n: binomial coefficients, uniform grid.
  static SignalSpec classic_fn(int n, const Scalar& a);
  /// Classic Y_n with frequency map g(h) = h^m: binomial coefficients on the
  /// uniform grid, frequencies h_j^m, limit exponent a^m.
  static SignalSpec classic_yn(int n, const Scalar& a, int m);
  /// Wraps prebuilt coefficients (any construction, either mode).
  SignalSpec(CoefficientSet coeffs, SignalKind kind, int yn_exponent = 1);

  const CoefficientSet& coefficients() const { return coeffs_; }
  const FrequencyGrid& grid() const { return coeffs_.grid(); }
  SignalKind kind() const { return kind_; }
  int yn_exponent() const { return yn_exponent_; }
  int n() const { return coeffs_.n(); }
  /// Effective frequencies w_j after the kind's frequency map.
  const std::vector<Scalar>& frequencies() const { return freqs_; }
  /// Exponent of the limit function e^{i t x}: the target a, or a^m for
  /// ClassicYn.
  const Scalar& target_exponent() const { return target_; }
  /// Cached coefficient 1-norm (precision policy input).
  const Scalar& coefficient_l1() const { return l1_; }

 private:
  CoefficientSet coeffs_;
  SignalKind kind_;
  int yn_exponent_;
  std::vector<Scalar> freqs_;
  Scalar target_;
  Scalar l1_;
};

/// Residuals of the derivative-matching conditions at the origin:
/// residuals[p] = f^{(p)}(0) - (i t)^p with t the signal's target exponent.
struct TaylorReport {
  int n = 0;
  std::vector<ComplexScalar> residuals;
  Scalar max_abs;
  bool exact = false;  // true iff every residual is exactly zero
};

/// f(x) = sum_j c_j e^{i w_j x}. Float result at `bits`, computed at the
/// policy's working precision. With exact inputs and x = 0 the sum is
/// evaluated exactly (no exponentials are needed) and returned in exact mode.
/// Raises Error("PrecisionInsufficient") when bits is below the policy
/// minimum for this coefficient magnitude.
ComplexScalar eval(const SignalSpec& sig, const Scalar& x, long bits,
                   const PrecisionPolicy& policy = {});

/// f^{(p)}(x) = sum_j c_j (i w_j)^p e^{i w_j x}; same exact-at-zero rule.
ComplexScalar eval_derivative(const SignalSpec& sig, long p, const Scalar& x, long bits,
                              const PrecisionPolicy& policy = {});

/// Exact residual check of f^{(p)}(0) = (i t)^p for p = 0..n. Requires
/// exact-mode coefficients. NewMethod signals report exact = true; the
/// classic kinds generally have nonzero residuals from p = 2 on.
TaylorReport taylor_check(const SignalSpec& sig);

/// |f(x) - e^{i q x}| for the given limit exponent q.
Scalar error_vs_limit(const SignalSpec& sig, const Scalar& x, const Scalar& limit_exponent,
                      long bits, const PrecisionPolicy& policy = {});

/// Instantaneous frequency Im(f'(x)/f(x)). Exact at x = 0 with exact inputs
/// (equals the target exponent for Taylor-matched signals). Raises
/// Error("NearZeroSignal") when |f(x)| < 2^-(working/2).
Scalar local_frequency(const SignalSpec& sig, const Scalar& x, long bits,
                       const PrecisionPolicy& policy = {});

/// (cos(x/n) + i a sin(x/n))^n — the closed product form of the classic
/// signal; equals the ClassicFn Fourier sum up to evaluation error.
ComplexScalar classic_product_form(int n, const Scalar& a, const Scalar& x, long bits);

/// One sampled row of a sweep (the CSV/JSON schema n,x,re,im,abs_err,
/// local_freq). local_freq is absent where the signal modulus was too small.
struct EvalSample {
  int n = 0;
  Scalar x;
  Real re;
  Real im;
  Real abs_err;
  std::optional<Real> local_freq;
};

/// CSV document with header n,x,re,im,abs_err,local_freq; decimal values at
/// 30 significant digits.
std::string samples_to_csv(const std::vector<EvalSample>& samples);

}  // namespace superosc
