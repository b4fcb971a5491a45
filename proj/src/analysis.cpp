#include "superosc/analysis.hpp"

#include <future>
#include <sstream>
#include <thread>
#include <utility>

namespace superosc {

namespace {

FrequencyGrid make_grid(const SweepConfig& cfg, int n) {
  switch (cfg.family) {
    case GridFamily::UniformLinear: return uniform_linear_grid(n);
    case GridFamily::PowerDenominator: return power_denominator_grid(n, cfg.power);
    case GridFamily::PowerNumerator: return power_numerator_grid(n, cfg.power);
    case GridFamily::Custom:
      fail("InvalidArgument", "sweeps need a generated grid family, not custom nodes");
  }
  fail("InvalidArgument", "unknown grid family");
}

SignalSpec make_signal(const SweepConfig& cfg, int n, SignalKind method) {
  switch (method) {
    case SignalKind::NewMethod: return SignalSpec::new_method(make_grid(cfg, n), cfg.a);
    case SignalKind::ClassicFn: return SignalSpec::classic_fn(n, cfg.a);
    case SignalKind::ClassicYn: return SignalSpec::classic_yn(n, cfg.a, cfg.yn_exponent);
  }
  fail("InvalidArgument", "unknown signal kind");
}

ComparisonRow make_row(const SweepConfig& cfg, int n, SignalKind method) {
  ComparisonRow row;
  row.n = n;
  row.method = method;
  try {
    SignalSpec sig = make_signal(cfg, n, method);
    if (cfg.outputs.coeff_growth) row.l1 = l1_norm(sig.coefficients());
    if (cfg.outputs.taylor_residuals) row.max_taylor_residual = taylor_check(sig).max_abs;
    if (cfg.outputs.error_curve && !cfg.x_samples.empty()) {
      std::optional<Scalar> worst;
      for (const Scalar& x : cfg.x_samples) {
        Scalar err = error_vs_limit(sig, x, sig.target_exponent(), cfg.bits);
        Real err_f = err.to_real(cfg.bits);
        if (!worst || err_f > worst->to_real(cfg.bits)) worst = err;
      }
      row.err_at_x = worst;
    }
  } catch (const Error& e) {
    row.error = e.code();
  }
  return row;
}

struct NChunk {
  std::vector<ComparisonRow> rows;
  std::vector<EvalSample> samples;
};

NChunk run_chunk(const SweepConfig& cfg, int n, const std::vector<SignalKind>& methods) {
  NChunk chunk;
  for (SignalKind method : methods) {
    chunk.rows.push_back(make_row(cfg, n, method));
  }
  if (cfg.outputs.error_curve || cfg.outputs.local_freq) {
    try {
      SignalSpec sig = make_signal(cfg, n, SignalKind::NewMethod);
      for (const Scalar& x : cfg.x_samples) {
        ComplexScalar v = eval(sig, x, cfg.bits);
        Real re = v.re().to_real(cfg.bits);
        Real im = v.im().to_real(cfg.bits);
        Real abs_err =
            error_vs_limit(sig, x, sig.target_exponent(), cfg.bits).to_real(cfg.bits);
        std::optional<Real> lf;
        if (cfg.outputs.local_freq) {
          try {
            lf = local_frequency(sig, x, cfg.bits).to_real(cfg.bits);
          } catch (const Error&) {
            // Sample sits on a zero of the signal; leave the field empty.
          }
        }
        chunk.samples.push_back(EvalSample{n, x, re, im, abs_err, lf});
      }
    } catch (const Error& e) {
      chunk.rows.push_back(
          ComparisonRow{n, SignalKind::NewMethod, {}, {}, {}, std::string(e.code())});
    }
  }
  return chunk;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg, unsigned threads) {
  for (size_t i = 0; i + 1 < cfg.n_values.size(); ++i) {
    if (cfg.n_values[i] >= cfg.n_values[i + 1]) {
      fail("InvalidArgument", "n values must be strictly increasing");
    }
  }
  std::vector<SignalKind> methods{SignalKind::NewMethod};
  if (cfg.outputs.method_compare) {
    methods.push_back(SignalKind::ClassicFn);
    methods.push_back(SignalKind::ClassicYn);
  }

  if (threads == 0) threads = std::thread::hardware_concurrency();
  SweepResult result;
  if (threads <= 1 || cfg.n_values.size() <= 1) {
    for (int n : cfg.n_values) {
      NChunk chunk = run_chunk(cfg, n, methods);
      result.rows.insert(result.rows.end(), chunk.rows.begin(), chunk.rows.end());
      result.samples.insert(result.samples.end(), chunk.samples.begin(), chunk.samples.end());
    }
    return result;
  }

  std::vector<std::future<NChunk>> futures;
  futures.reserve(cfg.n_values.size());
  for (int n : cfg.n_values) {
    futures.push_back(
        std::async(std::launch::async, [&cfg, n, &methods] { return run_chunk(cfg, n, methods); }));
  }
  // Deterministic merge in configuration order, whatever the schedule did.
  for (auto& f : futures) {
    NChunk chunk = f.get();
    result.rows.insert(result.rows.end(), chunk.rows.begin(), chunk.rows.end());
    result.samples.insert(result.samples.end(), chunk.samples.begin(), chunk.samples.end());
  }
  return result;
}

long required_bits_estimate(const FrequencyGrid& grid, const Scalar& a, int target_digits,
                            const PrecisionPolicy& policy) {
  if (target_digits < 0) fail("InvalidArgument", "target digits must be >= 0");
  Scalar l1 = l1_norm(closed_form_coefficients(grid, a));
  long growth;
  if (l1.is_exact()) {
    growth = ceil_log2(l1.rational());
  } else {
    growth = l1.real().exponent();
  }
  return growth + ceil_log2_pow10(target_digits) + policy.guard_bits;
}

std::string rows_to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "n,method,l1_norm,max_taylor_residual,err_at_x,error\n";
  for (const ComparisonRow& row : rows) {
    out << row.n << ',' << signal_kind_name(row.method) << ',';
    if (row.l1) out << row.l1->to_real(128).str(30);
    out << ',';
    if (row.max_taylor_residual) out << row.max_taylor_residual->to_real(128).str(30);
    out << ',';
    if (row.err_at_x) out << row.err_at_x->to_real(128).str(30);
    out << ',';
    if (row.error) out << *row.error;
    out << '\n';
  }
  return out.str();
}

}  // namespace superosc
