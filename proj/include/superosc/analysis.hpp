#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superosc/signal.hpp"
#include "superosc/supershift.hpp"

namespace superosc {

struct SweepOutputs {
  bool coeff_growth = false;
  bool taylor_residuals = false;
  bool error_curve = false;
  bool local_freq = false;
  bool method_compare = false;
};

/// Desk-scale experiment description: which orders, which grid family, which
/// target, where to sample, and which columns to fill.
struct SweepConfig {
  std::vector<int> n_values;  // strictly increasing
  GridFamily family = GridFamily::UniformLinear;
  int power = 1;              // p for the power families
  Scalar a = Scalar(Rational(2));
  int yn_exponent = 2;        // m for the ClassicYn comparison rows
  std::vector<Scalar> x_samples;
  long bits = 128;
  SweepOutputs outputs;
};

/// One comparison line: coefficient growth, residual structure and limit
/// error for a (n, method) pair. err_at_x is the largest
/// |f_n(x) - e^{i t x}| over the configured x samples, against the method's
/// own limit exponent t. Failures are recorded per row instead of aborting
/// the sweep.
struct ComparisonRow {
  int n = 0;
  SignalKind method = SignalKind::NewMethod;
  std::optional<Scalar> l1;
  std::optional<Scalar> max_taylor_residual;
  std::optional<Scalar> err_at_x;
  std::optional<std::string> error;
};

struct SweepResult {
  std::vector<ComparisonRow> rows;
  std::vector<EvalSample> samples;  // per (n, x) samples of the matched signal
};

/// Runs the sweep. Rows for different n are independent and evaluated
/// concurrently (threads = 0 picks the hardware count, 1 forces serial);
/// results are merged in configuration order, so output is bit-identical
/// across runs and across schedules.
SweepResult run_sweep(const SweepConfig& cfg, unsigned threads = 0);

/// ceil(log2 sum|X_j|) + ceil(target_digits * log2 10) + guard bits: the
/// float precision at which closed-form coefficients retain target_digits
/// significant decimal digits through the cancellation.
long required_bits_estimate(const FrequencyGrid& grid, const Scalar& a, int target_digits,
                            const PrecisionPolicy& policy = {});

/// CSV with header n,method,l1_norm,max_taylor_residual,err_at_x,error.
/// Exact values are printed as decimals at 30 significant digits; the JSON
/// form keeps them as exact "p/q" strings.
std::string rows_to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace superosc
