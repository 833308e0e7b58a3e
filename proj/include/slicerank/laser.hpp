#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicerank/bounds.hpp"
#include "slicerank/partition.hpp"
#include "slicerank/rank.hpp"

namespace slicerank {

struct LaserReadiness {
  bool ok = false;
  /// Blocks are maximal matrix multiplication tensors (or asserted so).
  bool blocks_matmul = false;
  bool degeneration_asserted = false;
  /// Some integer levels, injective per axis, put every block on i + j + k = ell.
  bool on_hyperplane = false;
  /// T is variable-symmetric and the partition is T-symmetric.
  bool symmetric = false;

  std::optional<std::int64_t> ell;
  std::array<std::vector<std::int64_t>, 3> levels;  // level of each part, per axis
  std::map<BlockKey, MatmulShape> shapes;
  std::vector<std::string> diagnostics;
};

/// Checks the three laser-readiness conditions. Block shapes are certified by
/// exact isomorphism to a matrix multiplication tensor; pass
/// assume_degeneration to accept that condition as externally certified.
LaserReadiness laser_ready(const Tensor& t, const VariablePartition& p, bool assume_degeneration = false,
                           std::uint64_t seed = 1);

/// The symmetric optimum, which for a laser-ready partition equals S~(T) and
/// Q~(T). Throws InapplicableError when the partition is not laser-ready.
BoundReport laser_lower_bound(const Tensor& t, const VariablePartition& p, bool assume_degeneration = false,
                              std::uint64_t seed = 1);

}  // namespace slicerank
