#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicerank/rational.hpp"

namespace slicerank {

enum class Axis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr std::size_t axis_index(Axis a) { return static_cast<std::size_t>(a); }
char axis_letter(Axis a);

/// Position of a term x_i y_j z_k, as indices into the three variable lists.
struct Index3 {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  std::size_t operator[](Axis a) const { return a == Axis::X ? x : (a == Axis::Y ? y : z); }
  friend auto operator<=>(const Index3&, const Index3&) = default;
};

/// Cited knowledge about the asymptotic rank R~ of a tensor. It is an input to
/// the omega bounds, never something this library computes.
struct RankFact {
  double value = 0.0;
  bool lower_bound_only = false;  // only R~ >= value is known
  std::string citation;
};

/// A trilinear form sum c_{ijk} x_i y_j z_k with exact rational coefficients.
///
/// Variables are addressed by position; each carries a label that is unique
/// within its axis. Only nonzero coefficients are stored. Operations in this
/// header are pure and return new tensors; `add` exists for building one.
class Tensor {
 public:
  using EntryMap = std::map<Index3, Rational>;

  Tensor() = default;
  /// Default labels x_0, x_1, ... on each axis.
  Tensor(std::size_t nx, std::size_t ny, std::size_t nz);
  explicit Tensor(std::array<std::vector<std::string>, 3> labels);

  std::size_t size(Axis a) const { return labels_[axis_index(a)].size(); }
  std::array<std::size_t, 3> sizes() const { return {size(Axis::X), size(Axis::Y), size(Axis::Z)}; }
  const std::vector<std::string>& labels(Axis a) const { return labels_[axis_index(a)]; }
  const std::string& label(Axis a, std::size_t i) const { return labels_[axis_index(a)].at(i); }

  const EntryMap& entries() const { return entries_; }
  std::size_t num_entries() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational coefficient(const Index3& idx) const;

  /// Adds c to the coefficient at idx, dropping the entry if it cancels to 0.
  void add(const Index3& idx, const Rational& c);

  const std::optional<RankFact>& asymptotic_rank() const { return rank_fact_; }
  void set_asymptotic_rank(RankFact fact) { rank_fact_ = std::move(fact); }

  /// Equal sizes and equal coefficients; labels and metadata are ignored.
  bool same_form(const Tensor& other) const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

 private:
  std::array<std::vector<std::string>, 3> labels_;
  EntryMap entries_;
  std::optional<RankFact> rank_fact_;
};

/// Per-axis maps from old variable index to new variable index.
using Relabeling = std::array<std::vector<std::size_t>, 3>;

Tensor tensor_product(const Tensor& a, const Tensor& b);

/// T^{(x)n}. Refuses n > cap to bound memory.
Tensor tensor_power(const Tensor& t, std::size_t n, std::size_t cap = 3);

Tensor direct_sum(const Tensor& a, const Tensor& b);
Tensor n_copies(std::size_t m, const Tensor& t);

/// Coefficientwise sum of two tensors over the same variable sets.
Tensor add(const Tensor& a, const Tensor& b);
Tensor subtract(const Tensor& a, const Tensor& b);

/// rot(T) over (Y, Z, X): coefficient of y_j z_k x_i equals that of x_i y_j z_k.
Tensor rotate(const Tensor& t);

/// Applies a bijective relabeling; the labels travel with their variables.
Tensor relabel(const Tensor& t, const Relabeling& maps);

/// Equal axis sizes and c(x_i, y_j, z_k) == c(x_j, y_k, z_i) for all i, j, k.
/// Checked under the stored index order; no isomorphism search.
bool is_variable_symmetric(const Tensor& t);

/// Every variable occurs in some nonzero term.
bool is_minimal(const Tensor& t);

/// T with the given variables kept and all others zeroed out. The variable
/// sets are unchanged.
Tensor restrict_to(const Tensor& t, const std::array<std::vector<bool>, 3>& keep);

struct Trimmed {
  Tensor tensor;
  /// original index of each variable kept, per axis
  std::array<std::vector<std::size_t>, 3> kept;
};

/// Drops unused variables so the result is minimal.
Trimmed trim(const Tensor& t);

/// T (x) rot(T) (x) rot^2(T), with the Y and Z axes ordered so the result is
/// variable-symmetric in index order. Every axis is indexed by triples
/// (a, b, c) in X x Y x Z of T, row-major.
Tensor cyclic_product(const Tensor& t);

}  // namespace slicerank
