#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superosc/scalar.hpp"

namespace superosc {

enum class GridFamily { UniformLinear, PowerDenominator, PowerNumerator, Custom };

std::string grid_family_name(GridFamily family);
std::optional<GridFamily> grid_family_from_name(std::string_view name);

/// Ordered frequency nodes h_0..h_n, pairwise distinct, with the family they
/// came from. Index order is part of the contract: coefficients produced for
/// a grid correspond to its nodes position by position. Immutable.
class FrequencyGrid {
 public:
  int n() const { return static_cast<int>(nodes_.size()) - 1; }
  const std::vector<Scalar>& nodes() const { return nodes_; }
  const Scalar& node(int j) const { return nodes_.at(static_cast<size_t>(j)); }
  GridFamily family() const { return family_; }
  /// Exponent parameter of the power families; 0 otherwise.
  int power() const { return power_; }
  /// True iff every |h_j| <= 1.
  bool band_limited() const { return band_limited_; }
  Mode mode() const { return nodes_.front().mode(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// prod_{i<j} (h_j - h_i); nonzero for every constructed grid.
  Scalar vandermonde_product() const;

  friend FrequencyGrid uniform_linear_grid(int n);
  friend FrequencyGrid power_denominator_grid(int n, int p);
  friend FrequencyGrid power_numerator_grid(int n, int p);
  friend FrequencyGrid custom_grid(std::vector<Scalar> nodes, bool allow_single_node,
                                   std::optional<Real> min_sep);
  friend FrequencyGrid to_float(const FrequencyGrid& grid, long bits);

 private:
  FrequencyGrid(std::vector<Scalar> nodes, GridFamily family, int power);

  std::vector<Scalar> nodes_;
  GridFamily family_ = GridFamily::Custom;
  int power_ = 0;
  bool band_limited_ = false;
  std::vector<std::string> warnings_;
};

/// Exact nodes h_j = 1 - 2j/n, descending from 1 to -1. Requires n >= 1;
/// n = 0 raises Error("DegenerateGrid").
FrequencyGrid uniform_linear_grid(int n);

/// Exact nodes h_j = 1 - 2j/n^p, all inside [-1, 1]. Requires n, p >= 1.
FrequencyGrid power_denominator_grid(int n, int p);

/// Exact nodes h_j = 1 - (2j/n)^p, strictly decreasing. For p >= 2 the last
/// nodes leave [-1, 1]; the grid is still valid (the coefficient formulas
/// need only distinctness) but is flagged band_limited = false with a warning.
FrequencyGrid power_numerator_grid(int n, int p);

/// Validates user-supplied nodes, preserving their order. Duplicate nodes
/// (exact equality, or relative separation below min_sep in float mode) raise
/// Error("DuplicateNodes") naming the offending pair. A single node is
/// refused unless allow_single_node is set. min_sep defaults to
/// 2^-(precision/2) relative, the point below which the node differences
/// carry no significance at the grid's own precision.
FrequencyGrid custom_grid(std::vector<Scalar> nodes, bool allow_single_node = false,
                          std::optional<Real> min_sep = std::nullopt);

/// The same grid with every node correctly rounded to a float at the given
/// precision. Separation is revalidated at that precision.
FrequencyGrid to_float(const FrequencyGrid& grid, long bits);

}  // namespace superosc
