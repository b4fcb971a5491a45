#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "superosc/analysis.hpp"

namespace superosc {

using Json = nlohmann::ordered_json;

/// Exact scalars serialize as lossless "p" / "p/q" strings, float scalars as
/// decimal strings at float_digits significant digits.
std::string scalar_to_string(const Scalar& s, int float_digits = 30);
/// Parses "p/q" or decimal text as an exact rational (finite decimals are
/// exact; this is the lossless direction for every document we emit).
Scalar scalar_from_string(const std::string& text);

Json grid_to_json(const FrequencyGrid& grid);
/// Rebuilds a grid: generated families are regenerated from (family, params)
/// and verified against the serialized nodes; custom grids revalidate their
/// nodes. Float-mode documents are refused (their decimal nodes do not
/// round-trip losslessly).
FrequencyGrid grid_from_json(const Json& doc);

Json coefficients_to_json(const CoefficientSet& coeffs);
CoefficientSet coefficients_from_json(const Json& doc);

Json generator_to_json(const GeneratorSpec& gen);
GeneratorSpec generator_from_json(const Json& doc);

Json complex_to_json(const ComplexScalar& z, int float_digits = 30);
Json taylor_report_to_json(const TaylorReport& report);

Json rows_to_json(const std::vector<ComparisonRow>& rows);
Json samples_to_json(const std::vector<EvalSample>& samples);

Json sweep_config_to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const Json& doc);

}  // namespace superosc
