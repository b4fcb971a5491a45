#include "superosc/coefficients.hpp"

#include <utility>

namespace superosc {

std::string coefficient_method_name(CoefficientMethod method) {
  switch (method) {
    case CoefficientMethod::ClosedForm: return "closed-form";
    case CoefficientMethod::VandermondeSolve: return "vandermonde-solve";
    case CoefficientMethod::Binomial: return "binomial";
  }
  fail("InvalidArgument", "unknown coefficient method");
}

std::optional<CoefficientMethod> coefficient_method_from_name(std::string_view name) {
  if (name == "closed-form" || name == "closed") return CoefficientMethod::ClosedForm;
  if (name == "vandermonde-solve" || name == "vandermonde") return CoefficientMethod::VandermondeSolve;
  if (name == "binomial") return CoefficientMethod::Binomial;
  return std::nullopt;
}

CoefficientSet::CoefficientSet(FrequencyGrid grid, Scalar target_a, std::vector<Scalar> values,
                               CoefficientMethod method, std::vector<std::string> warnings)
    : grid_(std::move(grid)),
      a_(std::move(target_a)),
      values_(std::move(values)),
      method_(method),
      warnings_(std::move(warnings)) {
  if (values_.size() != grid_.nodes().size()) {
    fail("InvalidArgument", "coefficient count does not match the grid");
  }
  if (mode() == Mode::Exact) {
    // p = 0 moment row: the values always sum to one, whichever construction.
    Rational sum(0);
    for (const Scalar& v : values_) sum += v.rational();
    if (sum != Rational(1)) {
      fail("InvalidArgument", "coefficients do not sum to 1: " + sum.str());
    }
  }
}

bool CoefficientSet::superoscillatory_regime() const {
  if (!grid_.band_limited()) return false;
  Scalar one = a_.is_exact() ? Scalar(Rational(1)) : Scalar(Real::from_long(1, a_.precision()));
  return a_.abs() > one;
}

namespace {

void require_grid_mode(const FrequencyGrid& grid, const Scalar& a) {
  if (grid.mode() != a.mode()) {
    fail("MixedMode", "grid nodes and target a must share one arithmetic mode");
  }
}

// Numerator/denominator product accumulator for the float path: keeps the
// mantissa within 2^(+-prec/2) by pulling powers of two into a separate
// exponent, so long products for large n cannot overflow or drain to zero.
class ScaledProduct {
 public:
  explicit ScaledProduct(long prec) : value_(Real::from_long(1, prec)), prec_(prec) {}

  void multiply(const Real& f) {
    value_ = value_ * f;
    if (value_.is_zero()) return;
    long e = value_.exponent();
    if (e > prec_ / 2 || e < -prec_ / 2) {
      value_ = value_.ldexp(-e);
      exponent_ += e;
    }
  }

  bool is_zero() const { return value_.is_zero(); }

  Real divided_by(const ScaledProduct& den) const {
    return (value_ / den.value_).ldexp(exponent_ - den.exponent_);
  }

 private:
  Real value_;
  long exponent_ = 0;
  long prec_ = 0;
};

std::vector<Scalar> closed_form_exact(const FrequencyGrid& grid, const Rational& a) {
  const auto& nodes = grid.nodes();
  std::vector<Scalar> values;
  values.reserve(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) {
    Rational num(1);
    Rational den(1);
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      num *= nodes[k].rational() - a;
      den *= nodes[k].rational() - nodes[j].rational();
    }
    values.emplace_back(num / den);
  }
  return values;
}

std::vector<Scalar> closed_form_float(const FrequencyGrid& grid, const Real& a) {
  const auto& nodes = grid.nodes();
  long prec = a.precision();
  for (const Scalar& h : nodes) prec = std::max(prec, h.precision());
  std::vector<Scalar> values;
  values.reserve(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) {
    ScaledProduct num(prec);
    ScaledProduct den(prec);
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      num.multiply(nodes[k].real() - a);
      den.multiply(nodes[k].real() - nodes[j].real());
    }
    if (den.is_zero()) fail("SingularSystem", "node differences vanished at this precision");
    values.emplace_back(num.divided_by(den));
  }
  return values;
}

}  // namespace

CoefficientSet closed_form_coefficients(const FrequencyGrid& grid, const Scalar& a) {
  require_grid_mode(grid, a);
  std::vector<Scalar> values = a.is_exact() ? closed_form_exact(grid, a.rational())
                                            : closed_form_float(grid, a.real());
  return CoefficientSet(grid, a, std::move(values), CoefficientMethod::ClosedForm);
}

CoefficientSet vandermonde_solve_coefficients(const FrequencyGrid& grid, const Scalar& a) {
  require_grid_mode(grid, a);
  const auto& nodes = grid.nodes();
  const size_t m = nodes.size();

  // Augmented moment system [H | B]: H(p, j) = h_j^p, B(p) = a^p.
  std::vector<std::vector<Scalar>> rows(m);
  for (size_t p = 0; p < m; ++p) {
    rows[p].reserve(m + 1);
    for (size_t j = 0; j < m; ++j) {
      rows[p].push_back(nodes[j].pow(static_cast<long>(p)));
    }
    rows[p].push_back(a.pow(static_cast<long>(p)));
  }

  // Gaussian elimination; any nonzero pivot is enough in exact arithmetic,
  // and in float mode the largest-magnitude pivot is taken.
  for (size_t col = 0; col < m; ++col) {
    size_t pivot = col;
    if (grid.mode() == Mode::Exact) {
      while (pivot < m && rows[pivot][col].is_zero()) ++pivot;
      if (pivot == m) fail("SingularSystem", "zero pivot column in the moment system");
    } else {
      for (size_t r = col + 1; r < m; ++r) {
        if (rows[r][col].abs() > rows[pivot][col].abs()) pivot = r;
      }
      if (rows[pivot][col].is_zero()) {
        fail("SingularSystem", "moment system is numerically singular at this precision");
      }
    }
    std::swap(rows[col], rows[pivot]);
    for (size_t r = col + 1; r < m; ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] / rows[col][col];
      for (size_t c = col; c <= m; ++c) {
        rows[r][c] = rows[r][c] - factor * rows[col][c];
      }
    }
  }

  std::vector<Scalar> values(m);
  for (size_t col = m; col-- > 0;) {
    Scalar acc = rows[col][m];
    for (size_t c = col + 1; c < m; ++c) {
      acc = acc - rows[col][c] * values[c];
    }
    values[col] = acc / rows[col][col];
  }
  return CoefficientSet(grid, a, std::move(values), CoefficientMethod::VandermondeSolve);
}

CoefficientSet binomial_coefficients(int n, const Scalar& a) {
  if (n < 1) fail("DegenerateGrid", "binomial coefficients need n >= 1");
  if (!a.is_exact()) {
    fail("UnsupportedMode", "binomial coefficients are an exact construction; pass a rational a");
  }
  FrequencyGrid grid = uniform_linear_grid(n);
  Rational plus = (Rational(1) + a.rational()) / Rational(2);
  Rational minus = (Rational(1) - a.rational()) / Rational(2);
  std::vector<Scalar> values;
  values.reserve(static_cast<size_t>(n) + 1);
  mpz_class binom;
  for (int j = 0; j <= n; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    values.emplace_back(Rational(mpq_class(binom)) * plus.pow(n - j) * minus.pow(j));
  }
  return CoefficientSet(std::move(grid), a, std::move(values), CoefficientMethod::Binomial);
}

Scalar l1_norm(const CoefficientSet& coeffs) {
  Scalar sum = coeffs.mode() == Mode::Exact
                   ? Scalar(Rational(0))
                   : Scalar(Real(coeffs.values().front().precision()));
  for (const Scalar& v : coeffs.values()) sum = sum + v.abs();
  return sum;
}

}  // namespace superosc
