#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slicerank/partition.hpp"
#include "slicerank/tensor.hpp"

namespace slicerank {

enum class Family { cw, cw_small, tq_lower };

/// "cw", "cw-small", "tq-lower".
const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// Smallest q with a table row (T_1^lower is the single term <1>, with R~ = 1).
std::size_t family_q_min(Family f);

Tensor family_tensor(Family f, std::size_t q);
VariablePartition family_partition(Family f, std::size_t q);

struct Golden {
  std::optional<double> slice_rank;
  double omega = 0.0;
};

/// Published table values, where they exist, at printed precision.
std::optional<Golden> golden(Family f, std::size_t q);

inline constexpr double kGoldenTolerance = 1e-4;

struct TableRow {
  std::size_t q = 0;
  double slice_rank = 0.0;   // upper bound from the partition optimizer
  double laser_value = 0.0;  // matching lower bound from the laser check
  double minmax_value = 0.0; // unsymmetrized max-min optimum, as a cross-check
  double omega = 0.0;
  bool converged = false;
  std::optional<Golden> expected;

  bool tight(double tol = 1e-6) const;
  /// Matches the golden values within tol; true when there is no golden row.
  bool matches(double tol = kGoldenTolerance) const;
};

/// Rows for q_min..q_max, computed in parallel across q.
std::vector<TableRow> compute_table(Family f, std::size_t q_min, std::size_t q_max);

}  // namespace slicerank
