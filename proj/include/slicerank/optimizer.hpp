#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "slicerank/distribution.hpp"

namespace slicerank {

struct OptimizerDiagnostics {
  std::size_t iterations = 0;
  /// Certified bound on (optimum - attained) in the log domain.
  double gap = 0.0;
  bool converged = false;
};

struct SymmetricResult {
  BlockDistribution p;
  ObjectiveValue value;
  /// Largest violation of "gradient equal on the support, not larger elsewhere",
  /// measured on the orbit variables.
  double kkt_residual = 0.0;
  OptimizerDiagnostics diagnostics;
};

/// Maximizes log p_X over distributions with p(T_ijk) = p(T_jki). The layout
/// must come from a partition with k_X = k_Y = k_Z, equal part sizes across
/// axes, and a rotation-closed block list; otherwise InputError.
SymmetricResult maximize_symmetric(const BlockLayout& layout, double tol = 1e-13);

struct MinmaxResult {
  BlockDistribution p;
  ObjectiveValue value;
  /// Weights on (log p_X, log p_Y, log p_Z) certifying the optimum.
  std::array<double, 3> weights{};
  OptimizerDiagnostics diagnostics;
};

/// Maximizes min(log p_X, log p_Y, log p_Z) over all distributions on L.
MinmaxResult maximize_minmax(const BlockLayout& layout, double tol = 1e-10);

struct ProductResult {
  BlockDistribution p;
  ObjectiveValue value;
  OptimizerDiagnostics diagnostics;
};

/// Maximizes log p_X + log p_Y + log p_Z over all distributions on L.
ProductResult maximize_product(const BlockLayout& layout, double tol = 1e-13);

struct Maximum1D {
  double argmax = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
Maximum1D maximize_1d(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-12);

/// Bisection on the sign of the derivative of a concave f; locates the argmax
/// to the last representable digit.
Maximum1D maximize_1d(const std::function<double(double)>& f, const std::function<double(double)>& df, double lo,
                      double hi);

}  // namespace slicerank
