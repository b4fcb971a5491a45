#include "superosc/grid.hpp"

#include <algorithm>
#include <utility>

namespace superosc {

std::string grid_family_name(GridFamily family) {
  switch (family) {
    case GridFamily::UniformLinear: return "uniform-linear";
    case GridFamily::PowerDenominator: return "power-denominator";
    case GridFamily::PowerNumerator: return "power-numerator";
    case GridFamily::Custom: return "custom";
  }
  fail("InvalidArgument", "unknown grid family");
}

std::optional<GridFamily> grid_family_from_name(std::string_view name) {
  if (name == "uniform-linear" || name == "uniform") return GridFamily::UniformLinear;
  if (name == "power-denominator" || name == "power-den") return GridFamily::PowerDenominator;
  if (name == "power-numerator" || name == "power-num") return GridFamily::PowerNumerator;
  if (name == "custom") return GridFamily::Custom;
  return std::nullopt;
}

namespace {

bool all_within_unit(const std::vector<Scalar>& nodes) {
  Scalar one = nodes.front().is_exact() ? Scalar(Rational(1))
                                        : Scalar(Real::from_long(1, nodes.front().precision()));
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](const Scalar& h) { return h.abs() <= one; });
}

void check_uniform_mode(const std::vector<Scalar>& nodes) {
  Mode mode = nodes.front().mode();
  for (const Scalar& h : nodes) {
    if (h.mode() != mode) fail("MixedMode", "grid nodes must share one arithmetic mode");
  }
}

void check_distinct(const std::vector<Scalar>& nodes, const std::optional<Real>& min_sep) {
  const bool exact = nodes.front().is_exact();
  long prec = 0;
  if (!exact) {
    for (const Scalar& h : nodes) prec = std::max(prec, h.precision());
  }
  Real threshold = exact ? Real(Real::min_precision)
                         : (min_sep ? *min_sep : Real::from_long(1, prec).ldexp(-prec / 2));
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      bool duplicate;
      if (exact) {
        duplicate = nodes[i] == nodes[j];
      } else {
        // Relative separation against the larger magnitude, floored at 1.
        Real diff = (nodes[i].real() - nodes[j].real()).abs();
        Real scale = std::max({nodes[i].real().abs(), nodes[j].real().abs(),
                               Real::from_long(1, prec)});
        duplicate = diff < threshold * scale;
      }
      if (duplicate) {
        fail("DuplicateNodes", "nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                   " coincide: h_" + std::to_string(i) + " = " + nodes[i].str() +
                                   ", h_" + std::to_string(j) + " = " + nodes[j].str());
      }
    }
  }
}

}  // namespace

FrequencyGrid::FrequencyGrid(std::vector<Scalar> nodes, GridFamily family, int power)
    : nodes_(std::move(nodes)), family_(family), power_(power) {
  band_limited_ = all_within_unit(nodes_);
  if (!band_limited_) {
    warnings_.push_back("grid has nodes outside [-1, 1]; signals built on it are not band-limited");
  }
}

Scalar FrequencyGrid::vandermonde_product() const {
  Scalar prod = mode() == Mode::Exact ? Scalar(Rational(1))
                                      : Scalar(Real::from_long(1, nodes_.front().precision()));
  for (size_t i = 0; i < nodes_.size(); ++i) {
    for (size_t j = i + 1; j < nodes_.size(); ++j) {
      prod = prod * (nodes_[j] - nodes_[i]);
    }
  }
  return prod;
}

FrequencyGrid uniform_linear_grid(int n) {
  if (n < 1) {
    fail("DegenerateGrid", "uniform grid needs n >= 1 (a single node is only available "
                           "through a custom grid with allow_single_node)");
  }
  std::vector<Scalar> nodes;
  nodes.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    nodes.emplace_back(Rational(n - 2L * j, n));
  }
  return FrequencyGrid(std::move(nodes), GridFamily::UniformLinear, 0);
}

FrequencyGrid power_denominator_grid(int n, int p) {
  if (n < 1) fail("DegenerateGrid", "power-denominator grid needs n >= 1");
  if (p < 1) fail("InvalidArgument", "power-denominator grid needs p >= 1");
  Rational np = Rational(n).pow(p);
  std::vector<Scalar> nodes;
  nodes.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    nodes.emplace_back(Rational(1) - Rational(2L * j) / np);
  }
  return FrequencyGrid(std::move(nodes), GridFamily::PowerDenominator, p);
}

FrequencyGrid power_numerator_grid(int n, int p) {
  if (n < 1) fail("DegenerateGrid", "power-numerator grid needs n >= 1");
  if (p < 1) fail("InvalidArgument", "power-numerator grid needs p >= 1");
  std::vector<Scalar> nodes;
  nodes.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    nodes.emplace_back(Rational(1) - Rational(2L * j, n).pow(p));
  }
  return FrequencyGrid(std::move(nodes), GridFamily::PowerNumerator, p);
}

FrequencyGrid custom_grid(std::vector<Scalar> nodes, bool allow_single_node,
                          std::optional<Real> min_sep) {
  if (nodes.empty()) fail("DegenerateGrid", "custom grid needs at least one node");
  if (nodes.size() == 1 && !allow_single_node) {
    fail("DegenerateGrid", "single-node grid requires allow_single_node");
  }
  check_uniform_mode(nodes);
  if (nodes.size() > 1) check_distinct(nodes, min_sep);
  return FrequencyGrid(std::move(nodes), GridFamily::Custom, 0);
}

FrequencyGrid to_float(const FrequencyGrid& grid, long bits) {
  std::vector<Scalar> nodes;
  nodes.reserve(grid.nodes().size());
  for (const Scalar& h : grid.nodes()) {
    nodes.push_back(Scalar(h.to_real(bits)));
  }
  check_distinct(nodes, std::nullopt);
  FrequencyGrid out(std::move(nodes), grid.family(), grid.power());
  return out;
}

}  // namespace superosc
