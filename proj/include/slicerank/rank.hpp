#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "slicerank/tensor.hpp"

namespace slicerank {

/// Exact rank of a sparse rational matrix given as rows of (column, value).
std::size_t exact_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows);

/// Rank of the flattening whose rows are the variables of `axis` and whose
/// columns are pairs of variables from the other two axes.
std::size_t flattening_rank(const Tensor& t, Axis axis);

inline std::size_t x_rank(const Tensor& t) { return flattening_rank(t, Axis::X); }
inline std::size_t y_rank(const Tensor& t) { return flattening_rank(t, Axis::Y); }
inline std::size_t z_rank(const Tensor& t) { return flattening_rank(t, Axis::Z); }

/// m(T) = max(S_x, S_y, S_z).
std::size_t m_value(const Tensor& t);

/// min(S_x, S_y, S_z), an upper bound on the slice rank.
std::size_t slice_rank_upper_trivial(const Tensor& t);

/// |X| |Y| |Z| after trimming unused variables. Throws InputError on overflow.
std::uint64_t measure(const Tensor& t);

struct MatmulShape {
  std::size_t a = 0, b = 0, c = 0;
  /// Carries t onto c0 * make_matmul(a, b, c) for a nonzero scalar c0.
  Relabeling witness;
  Rational scale;
};

/// Recognizes a minimal tensor with all nonzero coefficients equal as a scalar
/// multiple of <a,b,c> up to relabeling. Returns nullopt otherwise.
std::optional<MatmulShape> recognize_matmul(const Tensor& t);

}  // namespace slicerank
