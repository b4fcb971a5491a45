#include "superosc/json_io.hpp"

#include <utility>

namespace superosc {

std::string scalar_to_string(const Scalar& s, int float_digits) {
  return s.str(float_digits);
}

Scalar scalar_from_string(const std::string& text) {
  auto q = Rational::parse(text);
  if (!q) fail("InvalidArgument", "not a rational or decimal number: '" + text + "'");
  return Scalar(std::move(*q));
}

namespace {

std::vector<Scalar> nodes_from_json(const Json& doc) {
  std::vector<Scalar> nodes;
  for (const auto& item : doc) {
    nodes.push_back(scalar_from_string(item.get<std::string>()));
  }
  return nodes;
}

}  // namespace

Json grid_to_json(const FrequencyGrid& grid) {
  Json doc;
  doc["n"] = grid.n();
  doc["family"] = grid_family_name(grid.family());
  Json params = Json::object();
  if (grid.family() == GridFamily::PowerDenominator ||
      grid.family() == GridFamily::PowerNumerator) {
    params["p"] = grid.power();
  }
  doc["params"] = params;
  Json nodes = Json::array();
  for (const Scalar& h : grid.nodes()) nodes.push_back(scalar_to_string(h));
  doc["nodes"] = nodes;
  doc["band_limited"] = grid.band_limited();
  if (grid.mode() == Mode::Float) doc["mode"] = "float";
  if (!grid.warnings().empty()) doc["warnings"] = grid.warnings();
  return doc;
}

FrequencyGrid grid_from_json(const Json& doc) {
  if (doc.contains("mode") && doc["mode"] == "float") {
    fail("UnsupportedMode", "float-mode grid documents do not round-trip; regenerate the grid");
  }
  auto family = grid_family_from_name(doc.at("family").get<std::string>());
  if (!family) fail("InvalidArgument", "unknown grid family in document");
  if (*family == GridFamily::Custom) {
    if (!doc.contains("nodes")) fail("InvalidArgument", "custom grid document needs nodes");
    std::vector<Scalar> nodes = nodes_from_json(doc["nodes"]);
    bool single = nodes.size() == 1;
    return custom_grid(std::move(nodes), single);
  }
  int n = doc.at("n").get<int>();
  int p = 1;
  if (doc.contains("params") && doc["params"].contains("p")) {
    p = doc["params"]["p"].get<int>();
  }
  FrequencyGrid grid = *family == GridFamily::UniformLinear ? uniform_linear_grid(n)
                       : *family == GridFamily::PowerDenominator
                           ? power_denominator_grid(n, p)
                           : power_numerator_grid(n, p);
  if (doc.contains("nodes")) {
    std::vector<Scalar> nodes = nodes_from_json(doc["nodes"]);
    if (nodes.size() != grid.nodes().size()) {
      fail("InvalidArgument", "grid document nodes do not match the family parameters");
    }
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[j] != grid.nodes()[j]) {
        fail("InvalidArgument", "grid document node " + std::to_string(j) +
                                    " does not match the family formula");
      }
    }
  }
  return grid;
}

Json coefficients_to_json(const CoefficientSet& coeffs) {
  Json doc;
  doc["grid"] = grid_to_json(coeffs.grid());
  doc["a"] = scalar_to_string(coeffs.target_a());
  doc["method"] = coefficient_method_name(coeffs.method());
  Json values = Json::array();
  for (const Scalar& v : coeffs.values()) values.push_back(scalar_to_string(v));
  doc["values"] = values;
  doc["superoscillatory"] = coeffs.superoscillatory_regime();
  if (!coeffs.warnings().empty()) doc["warnings"] = coeffs.warnings();
  return doc;
}

CoefficientSet coefficients_from_json(const Json& doc) {
  FrequencyGrid grid = grid_from_json(doc.at("grid"));
  Scalar a = scalar_from_string(doc.at("a").get<std::string>());
  auto method = coefficient_method_from_name(doc.at("method").get<std::string>());
  if (!method) fail("InvalidArgument", "unknown coefficient method in document");
  std::vector<Scalar> values;
  for (const auto& item : doc.at("values")) {
    values.push_back(scalar_from_string(item.get<std::string>()));
  }
  std::vector<std::string> warnings;
  if (doc.contains("warnings")) {
    for (const auto& w : doc["warnings"]) warnings.push_back(w.get<std::string>());
  }
  return CoefficientSet(std::move(grid), std::move(a), std::move(values), *method,
                        std::move(warnings));
}

namespace {

Json series_entry_to_json(const ComplexScalar& g) {
  if (g.im().is_zero()) return scalar_to_string(g.re());
  Json entry;
  entry["re"] = scalar_to_string(g.re());
  entry["im"] = scalar_to_string(g.im());
  return entry;
}

ComplexScalar series_entry_from_json(const Json& item) {
  if (item.is_string()) return ComplexScalar(scalar_from_string(item.get<std::string>()));
  return {scalar_from_string(item.at("re").get<std::string>()),
          scalar_from_string(item.at("im").get<std::string>())};
}

}  // namespace

Json generator_to_json(const GeneratorSpec& gen) {
  Json doc;
  if (gen.builtin() == GeneratorSpec::Builtin::Exp) {
    doc["builtin"] = "exp";
    return doc;
  }
  if (gen.builtin() == GeneratorSpec::Builtin::ExpI) {
    doc["builtin"] = "exp-i";
    return doc;
  }
  Json series = Json::array();
  for (int p = 0; p <= *gen.truncation_order(); ++p) {
    series.push_back(series_entry_to_json(gen.series_coefficient(p)));
  }
  doc["series"] = series;
  doc["truncation_order"] = *gen.truncation_order();
  Json tail;
  tail["M"] = gen.tail_m().str();
  tail["r"] = gen.tail_r().str();
  doc["tail"] = tail;
  if (gen.radius_of_use()) doc["radius"] = gen.radius_of_use()->str();
  return doc;
}

GeneratorSpec generator_from_json(const Json& doc) {
  if (doc.contains("builtin")) {
    std::string name = doc["builtin"].get<std::string>();
    if (name == "exp") return GeneratorSpec::exp_builtin();
    if (name == "exp-i") return GeneratorSpec::exp_i_builtin();
    fail("InvalidArgument", "unknown builtin generator: " + name);
  }
  std::vector<ComplexScalar> series;
  for (const auto& item : doc.at("series")) series.push_back(series_entry_from_json(item));
  if (doc.contains("truncation_order") &&
      doc["truncation_order"].get<int>() != static_cast<int>(series.size()) - 1) {
    fail("InvalidArgument", "truncation_order does not match the series length");
  }
  Rational m(1);
  Rational r(1);
  if (doc.contains("tail")) {
    m = scalar_from_string(doc["tail"].at("M").get<std::string>()).rational();
    r = scalar_from_string(doc["tail"].at("r").get<std::string>()).rational();
  }
  std::optional<Rational> radius;
  if (doc.contains("radius")) {
    radius = scalar_from_string(doc["radius"].get<std::string>()).rational();
  }
  return GeneratorSpec::from_series(std::move(series), std::move(m), std::move(r),
                                    std::move(radius));
}

Json complex_to_json(const ComplexScalar& z, int float_digits) {
  Json doc;
  doc["re"] = scalar_to_string(z.re(), float_digits);
  doc["im"] = scalar_to_string(z.im(), float_digits);
  return doc;
}

Json taylor_report_to_json(const TaylorReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["exact"] = report.exact;
  doc["max_abs"] = scalar_to_string(report.max_abs);
  Json residuals = Json::array();
  for (const ComplexScalar& r : report.residuals) residuals.push_back(complex_to_json(r));
  doc["residuals"] = residuals;
  return doc;
}

Json rows_to_json(const std::vector<ComparisonRow>& rows) {
  Json arr = Json::array();
  for (const ComparisonRow& row : rows) {
    Json r;
    r["n"] = row.n;
    r["method"] = signal_kind_name(row.method);
    if (row.l1) r["l1_norm"] = scalar_to_string(*row.l1);
    if (row.max_taylor_residual) {
      r["max_taylor_residual"] = scalar_to_string(*row.max_taylor_residual);
    }
    if (row.err_at_x) r["err_at_x"] = scalar_to_string(*row.err_at_x);
    if (row.error) r["error"] = *row.error;
    arr.push_back(r);
  }
  return arr;
}

Json samples_to_json(const std::vector<EvalSample>& samples) {
  Json arr = Json::array();
  for (const EvalSample& s : samples) {
    Json r;
    r["n"] = s.n;
    r["x"] = s.x.to_real(128).str(30);
    r["re"] = s.re.str(30);
    r["im"] = s.im.str(30);
    r["abs_err"] = s.abs_err.str(30);
    if (s.local_freq) r["local_freq"] = s.local_freq->str(30);
    arr.push_back(r);
  }
  return arr;
}

Json sweep_config_to_json(const SweepConfig& cfg) {
  Json doc;
  doc["n_values"] = cfg.n_values;
  doc["family"] = grid_family_name(cfg.family);
  doc["p"] = cfg.power;
  doc["a"] = scalar_to_string(cfg.a);
  doc["yn_exponent"] = cfg.yn_exponent;
  Json xs = Json::array();
  for (const Scalar& x : cfg.x_samples) xs.push_back(scalar_to_string(x));
  doc["x_samples"] = xs;
  doc["bits"] = cfg.bits;
  Json outputs = Json::array();
  if (cfg.outputs.coeff_growth) outputs.push_back("coeff_growth");
  if (cfg.outputs.taylor_residuals) outputs.push_back("taylor_residuals");
  if (cfg.outputs.error_curve) outputs.push_back("error_curve");
  if (cfg.outputs.local_freq) outputs.push_back("local_freq");
  if (cfg.outputs.method_compare) outputs.push_back("method_compare");
  doc["outputs"] = outputs;
  return doc;
}

SweepConfig sweep_config_from_json(const Json& doc) {
  SweepConfig cfg;
  cfg.n_values = doc.at("n_values").get<std::vector<int>>();
  if (doc.contains("family")) {
    auto family = grid_family_from_name(doc["family"].get<std::string>());
    if (!family) fail("InvalidArgument", "unknown grid family in sweep config");
    cfg.family = *family;
  }
  if (doc.contains("p")) cfg.power = doc["p"].get<int>();
  if (doc.contains("a")) cfg.a = scalar_from_string(doc["a"].get<std::string>());
  if (doc.contains("yn_exponent")) cfg.yn_exponent = doc["yn_exponent"].get<int>();
  if (doc.contains("x_samples")) {
    for (const auto& item : doc["x_samples"]) {
      cfg.x_samples.push_back(scalar_from_string(item.get<std::string>()));
    }
  }
  if (doc.contains("bits")) cfg.bits = doc["bits"].get<long>();
  if (doc.contains("outputs")) {
    for (const auto& item : doc["outputs"]) {
      std::string name = item.get<std::string>();
      if (name == "coeff_growth") cfg.outputs.coeff_growth = true;
      else if (name == "taylor_residuals") cfg.outputs.taylor_residuals = true;
      else if (name == "error_curve") cfg.outputs.error_curve = true;
      else if (name == "local_freq") cfg.outputs.local_freq = true;
      else if (name == "method_compare") cfg.outputs.method_compare = true;
      else fail("InvalidArgument", "unknown sweep output: " + name);
    }
  }
  return cfg;
}

}  // namespace superosc
