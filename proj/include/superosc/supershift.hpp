#pragma once

#include <optional>
#include <vector>

#include "superosc/signal.hpp"

namespace superosc {

/// An entire function G given by its Maclaurin series g_p = G^{(p)}(0)/p!,
/// with a certified growth bound |g_p| <= M r^p / p! that yields computable
/// truncation tails. Builtins extend their series on demand; user series are
/// fixed up to truncation_order.
class GeneratorSpec {
 public:
  enum class Builtin { None, Exp, ExpI };

  /// G(z) = e^z (g_p = 1/p!, M = r = 1).
  static GeneratorSpec exp_builtin();
  /// G(z) = e^{iz} (g_p = i^p/p!, M = r = 1) — the generator that turns a
  /// supershift back into the plain exponential signal.
  static GeneratorSpec exp_i_builtin();
  /// User series with growth bound parameters M, r and an optional explicit
  /// evaluation radius.
  static GeneratorSpec from_series(std::vector<ComplexScalar> series, Rational tail_m,
                                   Rational tail_r,
                                   std::optional<Rational> radius = std::nullopt);

  Builtin builtin() const { return builtin_; }
  /// Highest usable series order; builtins have no fixed limit.
  std::optional<int> truncation_order() const;
  /// g_p; exact for the builtins and for exact user series.
  ComplexScalar series_coefficient(int p) const;
  /// G^{(p)}(0) = g_p * p!.
  ComplexScalar derivative_at_zero(int p) const;

  const Rational& tail_m() const { return tail_m_; }
  const Rational& tail_r() const { return tail_r_; }
  const std::optional<Rational>& radius_of_use() const { return radius_; }

 private:
  GeneratorSpec() = default;

  Builtin builtin_ = Builtin::None;
  std::vector<ComplexScalar> series_;
  Rational tail_m_ = Rational(1);
  Rational tail_r_ = Rational(1);
  std::optional<Rational> radius_;
};

/// psi(x) = sum_j Y_j G(h_j x) with the Taylor-matched Y_j.
struct SupershiftSignal {
  SupershiftSignal(const FrequencyGrid& grid, const Scalar& a, GeneratorSpec generator,
                   bool certify_uniqueness = false);

  CoefficientSet coeffs;
  GeneratorSpec generator;
};

/// Value together with its certified absolute error bound (series truncation
/// tails plus rounding).
struct SupershiftValue {
  ComplexScalar value;
  Real error_bound;
};

/// Y_j = prod_{k != j} (h_k - a)/(h_k - h_j) — the same product formula as
/// the plain closed form; the generator never enters the values. With
/// certify_uniqueness set, a zero G^{(p)}(0) for some p <= n attaches the
/// warning "GeneratorHypothesisViolated" (the coefficients still stand; the
/// hypothesis only backs the uniqueness argument).
CoefficientSet supershift_coefficients(const FrequencyGrid& grid, const Scalar& a,
                                       const GeneratorSpec& generator,
                                       bool certify_uniqueness = false);

/// sum_j Y_j G(h_j x) by truncated series with certified tails. Raises
/// Error("TailBoundUnavailable") when some |h_j x| exceeds the generator's
/// radius of use (default 4|a|).
SupershiftValue supershift_eval(const SupershiftSignal& sig, const Scalar& x, long bits,
                                const PrecisionPolicy& policy = {});

/// Exact residuals of sum_j Y_j h_j^p G^{(p)}(0) = a^p G^{(p)}(0) for
/// p = 0..n; zero for every validated input.
TaylorReport supershift_taylor_check(const SupershiftSignal& sig);

}  // namespace superosc
