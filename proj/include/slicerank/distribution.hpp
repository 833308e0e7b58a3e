#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "slicerank/partition.hpp"

namespace slicerank {

/// Probabilities on the blocks of a BlockLayout, in layout order.
using BlockDistribution = std::vector<double>;

/// x log x with 0 log 0 = 0.
double xlogx(double x);

/// Throws InputError unless d has one nonnegative entry per block summing to 1
/// within 1e-12.
void validate_distribution(const BlockLayout& layout, const BlockDistribution& d);

/// p(X_i) for every part i of the axis.
std::vector<double> marginals(const BlockLayout& layout, const BlockDistribution& d, Axis axis);

/// log p_X = sum_i p(X_i) (log |X_i| - log p(X_i)), with empty marginals contributing 0.
double log_p_axis(const BlockLayout& layout, const BlockDistribution& d, Axis axis);

struct ObjectiveValue {
  std::array<double, 3> log_value{};  // log p_X, log p_Y, log p_Z

  double log_min() const;
  double value(Axis a) const;
  double min_value() const;
};

ObjectiveValue eval_pX(const BlockLayout& layout, const BlockDistribution& d);

/// Blocks grouped into rotation orbits {(i,j,k), (j,k,i), (k,i,j)}. Throws
/// InputError if some rotation of a nonzero block is missing from the layout.
std::vector<std::vector<std::size_t>> rotation_orbits(const BlockLayout& layout);

/// Orbit-averaged distribution p'(T_ijk) = (p(T_ijk) + p(T_jki) + p(T_kij)) / 3.
BlockDistribution symmetrize(const BlockLayout& layout, const BlockDistribution& d);

/// p(T_ijk) = p(T_jki) for every block, within tol.
bool is_symmetric_distribution(const BlockLayout& layout, const BlockDistribution& d, double tol = 1e-12);

}  // namespace slicerank
