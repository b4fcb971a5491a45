#include "superosc/supershift.hpp"

#include <algorithm>
#include <utility>

namespace superosc {

namespace {

Rational factorial(long p) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
  return Rational(mpq_class(f));
}

// |g_p|^2 <= (M r^p / p!)^2, checked exactly for exact entries and by
// correctly rounded comparison otherwise.
void check_growth_bound(const std::vector<ComplexScalar>& series, const Rational& m,
                        const Rational& r) {
  for (size_t p = 0; p < series.size(); ++p) {
    Rational bound = m * r.pow(static_cast<long>(p)) / factorial(static_cast<long>(p));
    const ComplexScalar& g = series[p];
    bool ok;
    if (g.is_exact()) {
      ok = g.norm().rational() <= bound * bound;
    } else {
      ok = g.norm().real() <= Real::from_rational(bound * bound, g.re().precision());
    }
    if (!ok) {
      fail("InvalidArgument", "series entry " + std::to_string(p) +
                                  " exceeds the declared growth bound M r^p / p!");
    }
  }
}

}  // namespace

GeneratorSpec GeneratorSpec::exp_builtin() {
  GeneratorSpec g;
  g.builtin_ = Builtin::Exp;
  return g;
}

GeneratorSpec GeneratorSpec::exp_i_builtin() {
  GeneratorSpec g;
  g.builtin_ = Builtin::ExpI;
  return g;
}

GeneratorSpec GeneratorSpec::from_series(std::vector<ComplexScalar> series, Rational tail_m,
                                         Rational tail_r, std::optional<Rational> radius) {
  if (series.empty()) fail("InvalidArgument", "generator series must not be empty");
  if (tail_m.sgn() <= 0) fail("InvalidArgument", "growth bound M must be positive");
  if (tail_r.sgn() < 0) fail("InvalidArgument", "growth rate r must be >= 0");
  if (radius && radius->sgn() <= 0) fail("InvalidArgument", "radius of use must be positive");
  check_growth_bound(series, tail_m, tail_r);
  GeneratorSpec g;
  g.series_ = std::move(series);
  g.tail_m_ = std::move(tail_m);
  g.tail_r_ = std::move(tail_r);
  g.radius_ = std::move(radius);
  return g;
}

std::optional<int> GeneratorSpec::truncation_order() const {
  if (builtin_ != Builtin::None) return std::nullopt;
  return static_cast<int>(series_.size()) - 1;
}

ComplexScalar GeneratorSpec::series_coefficient(int p) const {
  if (p < 0) fail("InvalidArgument", "series order must be >= 0");
  switch (builtin_) {
    case Builtin::Exp:
      return ComplexScalar(Scalar(Rational(1) / factorial(p)));
    case Builtin::ExpI:
      return mul_i_power(ComplexScalar(Scalar(Rational(1) / factorial(p))), p);
    case Builtin::None:
      if (static_cast<size_t>(p) >= series_.size()) {
        fail("InvalidArgument", "series order " + std::to_string(p) +
                                    " exceeds the generator's truncation order");
      }
      return series_[static_cast<size_t>(p)];
  }
  fail("InvalidArgument", "unknown generator");
}

ComplexScalar GeneratorSpec::derivative_at_zero(int p) const {
  ComplexScalar g = series_coefficient(p);
  if (!g.is_exact()) {
    Real f = Real::from_rational(factorial(p), g.re().precision());
    return Scalar(f) * g;
  }
  return Scalar(factorial(p)) * g;
}

CoefficientSet supershift_coefficients(const FrequencyGrid& grid, const Scalar& a,
                                       const GeneratorSpec& generator, bool certify_uniqueness) {
  CoefficientSet base = closed_form_coefficients(grid, a);
  std::vector<std::string> warnings = base.warnings();
  if (certify_uniqueness) {
    if (auto order = generator.truncation_order(); order && *order < grid.n()) {
      fail("InvalidArgument", "generator truncation order " + std::to_string(*order) +
                                  " is below the grid order " + std::to_string(grid.n()));
    }
    for (int p = 0; p <= grid.n(); ++p) {
      if (generator.derivative_at_zero(p).is_zero()) {
        warnings.push_back("GeneratorHypothesisViolated: G^(" + std::to_string(p) +
                           ")(0) = 0, so the uniqueness argument does not apply "
                           "(the coefficients themselves do not involve G)");
        break;
      }
    }
  }
  return CoefficientSet(grid, a, base.values(), CoefficientMethod::ClosedForm,
                        std::move(warnings));
}

SupershiftSignal::SupershiftSignal(const FrequencyGrid& grid, const Scalar& a,
                                   GeneratorSpec gen, bool certify_uniqueness)
    : coeffs(supershift_coefficients(grid, a, gen, certify_uniqueness)),
      generator(std::move(gen)) {}

namespace {

struct SeriesValue {
  ComplexScalar value;   // float components at working precision
  Real tail;             // certified truncation tail for |G(z) - partial sum|
  long terms_used = 0;
};

// Truncated Maclaurin sum of G at a real point z, with the certified tail
// M (r|z|)^(N+1)/(N+1)! e^{r|z|} after the last term N.
SeriesValue eval_generator(const GeneratorSpec& gen, const Real& z, long w) {
  const long bound_prec = 64;
  Real az = z.abs().at(bound_prec);
  Real r64 = Real::from_rational(gen.tail_r(), bound_prec);
  Real m64 = Real::from_rational(gen.tail_m(), bound_prec);
  Real cutoff = Real::from_long(1, bound_prec).ldexp(-(w + 8));

  ComplexScalar acc(Scalar(Real(w)), Scalar(Real(w)));
  Real zp = Real::from_long(1, w);
  Real term_bound = m64;  // M (r|z|)^p / p!
  long p = 0;
  const long hard_cap = 16384;
  std::optional<int> order = gen.truncation_order();
  while (true) {
    ComplexScalar g = gen.series_coefficient(static_cast<int>(p));
    acc = acc + ComplexScalar(Scalar(g.re().to_real(w) * zp), Scalar(g.im().to_real(w) * zp));
    ++p;
    term_bound = term_bound * r64 * az / Real::from_long(p, bound_prec);
    bool stop;
    if (order) {
      stop = p > *order;
    } else {
      stop = term_bound < cutoff || p >= hard_cap;
    }
    if (stop) break;
    zp = zp * z;
  }
  // e^{r|z|} at the bound precision, nudged up.
  Real growth = exp(r64 * az, bound_prec).ldexp(1);
  SeriesValue out{acc, (term_bound * growth).ldexp(1), p};
  return out;
}

}  // namespace

SupershiftValue supershift_eval(const SupershiftSignal& sig, const Scalar& x, long bits,
                                const PrecisionPolicy& policy) {
  const CoefficientSet& coeffs = sig.coeffs;
  const GeneratorSpec& gen = sig.generator;
  Scalar l1 = l1_norm(coeffs);
  long min_bits = policy.min_request_bits(l1);
  if (bits < min_bits) {
    fail("PrecisionInsufficient", "requested " + std::to_string(bits) +
                                      " bits, need at least " + std::to_string(min_bits));
  }

  const long bound_prec = 64;
  // Radius of use: explicit, or 4|a| by default.
  Real radius = gen.radius_of_use()
                    ? Real::from_rational(*gen.radius_of_use(), bound_prec)
                    : Real::from_long(4, bound_prec) * coeffs.target_a().abs().to_real(bound_prec);

  // Headroom for max |G| <= M e^{r R} on the evaluation disc.
  Real growth = Real::from_rational(gen.tail_m(), bound_prec) *
                exp(Real::from_rational(gen.tail_r(), bound_prec) * radius, bound_prec);
  long growth_bits = growth > Real::from_long(1, bound_prec) ? growth.exponent() + 2 : 2;
  long w = policy.working_bits(bits, l1) + growth_bits;

  ComplexScalar acc(Scalar(Real(w)), Scalar(Real(w)));
  Real tail_total(bound_prec);
  long max_terms = 0;
  for (size_t j = 0; j < coeffs.values().size(); ++j) {
    Scalar h = coeffs.grid().node(static_cast<int>(j));
    Real z = (h.is_exact() && x.is_exact()) ? (h * x).to_real(w) : h.to_real(w) * x.to_real(w);
    if (z.abs().at(bound_prec) > radius) {
      fail("TailBoundUnavailable", "sample point h_j * x = " + z.str(8) +
                                       " lies outside the generator's radius of use " +
                                       radius.str(8));
    }
    SeriesValue gv = eval_generator(gen, z, w);
    Real weight = coeffs.values()[j].to_real(w);
    acc = acc + Scalar(weight) * gv.value;
    tail_total = tail_total + weight.abs().at(bound_prec) * gv.tail;
    max_terms = std::max(max_terms, gv.terms_used);
  }

  // Rounding budget: every term is correctly rounded at w, magnitudes are
  // bounded by l1 * max|G|.
  Real rounding = l1.to_real(bound_prec) * growth *
                  Real::from_long(static_cast<long>(coeffs.values().size()) + max_terms + 8,
                                  bound_prec)
                      .ldexp(-w + 2);
  SupershiftValue out{
      ComplexScalar(Scalar(acc.re().real().at(bits)), Scalar(acc.im().real().at(bits))),
      (tail_total + rounding).ldexp(1)};
  return out;
}

TaylorReport supershift_taylor_check(const SupershiftSignal& sig) {
  const CoefficientSet& coeffs = sig.coeffs;
  if (coeffs.mode() != Mode::Exact) {
    fail("UnsupportedMode", "supershift_taylor_check requires exact-mode coefficients");
  }
  const int n = coeffs.n();
  if (auto order = sig.generator.truncation_order(); order && *order < n) {
    fail("InvalidArgument", "generator truncation order is below the grid order");
  }
  const Rational a = coeffs.target_a().rational();

  TaylorReport report;
  report.n = n;
  report.residuals.reserve(static_cast<size_t>(n) + 1);
  Scalar max_abs = Scalar(Rational(0));
  bool exact = true;
  std::vector<Rational> node_pow(coeffs.values().size(), Rational(1));
  for (int p = 0; p <= n; ++p) {
    Rational moment(0);
    for (size_t j = 0; j < coeffs.values().size(); ++j) {
      if (p > 0) node_pow[j] *= coeffs.grid().node(static_cast<int>(j)).rational();
      moment += coeffs.values()[j].rational() * node_pow[j];
    }
    Rational diff = moment - a.pow(p);
    ComplexScalar gp = sig.generator.derivative_at_zero(p);
    if (!gp.is_exact()) fail("UnsupportedMode", "exact check needs an exact generator series");
    ComplexScalar residual = Scalar(diff) * gp;
    if (!residual.is_zero()) {
      exact = false;
      // Residuals are (rational) * G^{(p)}(0); off the axes report the exact
      // 1-norm bound |re| + |im| instead of the irrational modulus.
      Scalar mag = (residual.re().is_zero() || residual.im().is_zero())
                       ? residual.abs()
                       : residual.re().abs() + residual.im().abs();
      if (mag > max_abs) max_abs = mag;
    }
    report.residuals.push_back(residual);
  }
  report.max_abs = max_abs;
  report.exact = exact;
  return report;
}

}  // namespace superosc
