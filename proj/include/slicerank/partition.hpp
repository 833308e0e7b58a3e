#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "slicerank/tensor.hpp"

namespace slicerank {

struct Part {
  std::string label;
  std::vector<std::size_t> members;  // variable indices, kept sorted
};

/// A partition of each of X, Y, Z into labeled, nonempty, disjoint parts.
class VariablePartition {
 public:
  VariablePartition() = default;
  explicit VariablePartition(std::array<std::vector<Part>, 3> parts);

  std::size_t num_parts(Axis a) const { return parts_[axis_index(a)].size(); }
  const std::vector<Part>& parts(Axis a) const { return parts_[axis_index(a)]; }
  const Part& part(Axis a, std::size_t i) const { return parts_[axis_index(a)].at(i); }

  /// Part index of a variable; requires validate() to have passed for its axis size.
  std::size_t part_of(Axis a, std::size_t var) const { return owner_[axis_index(a)].at(var); }

  /// Throws InputError unless the parts cover 0..n-1 of each axis exactly once.
  void validate(const std::array<std::size_t, 3>& axis_sizes) const;

 private:
  std::array<std::vector<Part>, 3> parts_;
  std::array<std::vector<std::size_t>, 3> owner_;
};

/// Part indices (i, j, k) of a block T_{ijk}.
using BlockKey = std::array<std::size_t, 3>;

/// The nonzero blocks T_{ijk}, each over the full variable sets of T.
using BlockSet = std::map<BlockKey, Tensor>;

/// What the optimizers need to know about a partitioned tensor: the part
/// sizes |X_i|, |Y_j|, |Z_k| and the list L of nonzero blocks.
struct BlockLayout {
  std::array<std::vector<double>, 3> part_sizes;
  std::vector<BlockKey> blocks;
};

BlockSet blocks(const Tensor& t, const VariablePartition& p);
BlockLayout make_layout(const Tensor& t, const VariablePartition& p);

/// Coefficientwise sum of all blocks.
Tensor reconstruct(const Tensor& t, const BlockSet& bs);

/// k_X = k_Y = k_Z, |X_i| = |Y_i| = |Z_i|, and T_{jki} equals rot(T_{ijk}) once
/// the r-th member of each part is identified with the r-th member of the
/// equally indexed part on the other axes.
bool is_t_symmetric_partition(const Tensor& t, const VariablePartition& p);

/// One part per axis holding every variable.
VariablePartition trivial_partition(const std::array<std::size_t, 3>& axis_sizes);

/// One part per variable.
VariablePartition singleton_partition(const std::array<std::size_t, 3>& axis_sizes);

/// Parts {0}, {1..q}, {q+1} on every axis of make_cw(q).
VariablePartition cw_partition(std::size_t q);

/// Parts {0}, {1..q} on every axis of make_cw_small(q).
VariablePartition cw_small_partition(std::size_t q);

/// X_0 = {x_{i,0}}, X_1 = {x_{0,k}}, same for Y, and Z_0 = {z_{i,k}},
/// Z_1 = {z_{0,q+1}}, Z_2 = {z_{q+1,0}} on make_t112(q).
VariablePartition t112_partition(std::size_t q);

/// The product partition on cyclic_product(t): the variable (a, b, c) lies in
/// part (P_X(a), P_Y(b), P_Z(c)), linearized row-major. All three axes agree.
VariablePartition cyclic_product_partition(const Tensor& t, const VariablePartition& p);

}  // namespace slicerank
