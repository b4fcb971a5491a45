#pragma once

#include <string>
#include <vector>

#include "superosc/grid.hpp"
#include "superosc/scalar.hpp"

namespace superosc {

enum class CoefficientMethod { ClosedForm, VandermondeSolve, Binomial };

std::string coefficient_method_name(CoefficientMethod method);
std::optional<CoefficientMethod> coefficient_method_from_name(std::string_view name);

/// Coefficients attached to a grid and a target exponent a, one value per
/// node, in node order. For the exact-mode lagrange constructions the values
/// satisfy the moment identity sum_j values_j * h_j^p = a^p for p = 0..n.
class CoefficientSet {
 public:
  CoefficientSet(FrequencyGrid grid, Scalar target_a, std::vector<Scalar> values,
                 CoefficientMethod method, std::vector<std::string> warnings = {});

  const FrequencyGrid& grid() const { return grid_; }
  const Scalar& target_a() const { return a_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& value(int j) const { return values_.at(static_cast<size_t>(j)); }
  int n() const { return grid_.n(); }
  CoefficientMethod method() const { return method_; }
  Mode mode() const { return values_.front().mode(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// True when |a| > 1 on a band-limited grid: the signal built from these
  /// coefficients oscillates beyond its fastest Fourier component near 0.
  bool superoscillatory_regime() const;

 private:
  FrequencyGrid grid_;
  Scalar a_;
  std::vector<Scalar> values_;
  CoefficientMethod method_;
  std::vector<std::string> warnings_;
};

/// X_j = prod_{k != j} (h_k - a) / (h_k - h_j), term by term. Exact in exact
/// mode. In float mode, numerator and denominator products are accumulated
/// separately with exponent renormalization and divided once at the end.
CoefficientSet closed_form_coefficients(const FrequencyGrid& grid, const Scalar& a);

/// Solves the moment system H X = B, where row p of H is (h_0^p, ..., h_n^p)
/// and B = (1, a, ..., a^n), by Gaussian elimination in the grid's own
/// arithmetic — an independent route to the same coefficients, kept as the
/// verification oracle for closed_form_coefficients. Exact in exact mode.
/// Raises Error("SingularSystem") on a vanishing pivot, which cannot happen
/// for a validated exact grid and signals a numerically degenerate float one.
CoefficientSet vandermonde_solve_coefficients(const FrequencyGrid& grid, const Scalar& a);

/// C_j = binom(n, j) ((1+a)/2)^(n-j) ((1-a)/2)^j on the uniform grid, exact.
CoefficientSet binomial_coefficients(int n, const Scalar& a);

/// sum_j |values_j|; exact in exact mode. Drives the precision policy.
Scalar l1_norm(const CoefficientSet& coeffs);

}  // namespace superosc
