#include "slicerank/laser.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {u : M u = 0}, via reduced row echelon form over the rationals.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Levels {
  std::array<std::vector<std::int64_t>, 3> parts;
  std::int64_t ell = 0;
};

bool injective(const std::vector<std::int64_t>& v) {
  std::set<std::int64_t> seen(v.begin(), v.end());
  return seen.size() == v.size();
}

/// Shifts every axis so its smallest level is 0, keeping a + b + c - ell fixed.
Levels normalized(Levels l) {
  for (auto& axis : l.parts) {
    if (axis.empty()) continue;
    const std::int64_t low = *std::min_element(axis.begin(), axis.end());
    for (auto& v : axis) v -= low;
    l.ell -= low;
  }
  return l;
}

bool on_plane(const BlockLayout& layout, const Levels& l) {
  for (const auto& k : layout.blocks) {
    if (l.parts[0][k[0]] + l.parts[1][k[1]] + l.parts[2][k[2]] != l.ell) return false;
  }
  return true;
}

/// Integer levels, injective per axis, with level(i) + level(j) + level(k) = ell
/// on every block. Part indices are tried first, then random integer points of
/// the solution space.
std::optional<Levels> find_levels(const BlockLayout& layout, std::uint64_t seed) {
  const std::array<std::size_t, 3> k{layout.part_sizes[0].size(), layout.part_sizes[1].size(),
                                     layout.part_sizes[2].size()};
  Levels natural;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < k[a]; ++i) natural.parts[a].push_back(std::int64_t(i));
  const auto& first = layout.blocks.front();
  natural.ell = std::int64_t(first[0] + first[1] + first[2]);
  if (on_plane(layout, natural)) return natural;

  const std::size_t cols = k[0] + k[1] + k[2] + 1;
  RationalMatrix m;
  for (const auto& key : layout.blocks) {
    std::vector<Rational> row(cols, Rational(0));
    row[key[0]] = 1;
    row[k[0] + key[1]] = 1;
    row[k[0] + k[1] + key[2]] = 1;
    row[cols - 1] = -1;
    m.push_back(std::move(row));
  }
  const auto basis = nullspace(std::move(m), cols);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> u(cols, Rational(0));
    for (const auto& b : basis) {
      const int r = coef(rng);
      for (std::size_t c = 0; c < cols; ++c) u[c] += r * b[c];
    }
    BigInt scale = 1;
    for (const auto& v : u) scale = boost::multiprecision::lcm(scale, denominator(v));
    Levels l;
    std::size_t pos = 0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t i = 0; i < k[a]; ++i, ++pos) l.parts[a].push_back((numerator(u[pos]) * (scale / denominator(u[pos]))).convert_to<std::int64_t>());
    l.ell = (numerator(u[pos]) * (scale / denominator(u[pos]))).convert_to<std::int64_t>();
    if (injective(l.parts[0]) && injective(l.parts[1]) && injective(l.parts[2])) {
      l = normalized(l);
      if (on_plane(layout, l)) return l;
    }
  }
  return std::nullopt;
}

std::string key_name(const BlockKey& k) { return fmt::format("T_{{{},{},{}}}", k[0], k[1], k[2]); }

}  // namespace

LaserReadiness laser_ready(const Tensor& t, const VariablePartition& p, bool assume_degeneration,
                           std::uint64_t seed) {
  LaserReadiness out;
  const BlockLayout layout = make_layout(t, p);
  if (layout.blocks.empty()) {
    out.diagnostics.push_back("tensor is zero");
    return out;
  }

  out.blocks_matmul = true;
  if (assume_degeneration) {
    out.degeneration_asserted = true;
  } else {
    for (const auto& [key, block] : blocks(t, p)) {
      const Trimmed trimmed = trim(block);
      const std::array<std::size_t, 3> want{p.part(Axis::X, key[0]).members.size(),
                                            p.part(Axis::Y, key[1]).members.size(),
                                            p.part(Axis::Z, key[2]).members.size()};
      if (trimmed.tensor.sizes() != want) {
        out.blocks_matmul = false;
        out.diagnostics.push_back(fmt::format("condition 1: {} does not use every variable of its parts", key_name(key)));
        continue;
      }
      auto shape = recognize_matmul(trimmed.tensor);
      if (!shape) {
        out.blocks_matmul = false;
        out.diagnostics.push_back(
            fmt::format("condition 1: {} is not recognized as a matrix multiplication tensor", key_name(key)));
        continue;
      }
      out.shapes.emplace(key, std::move(*shape));
    }
  }

  if (auto levels = find_levels(layout, seed)) {
    out.on_hyperplane = true;
    out.ell = levels->ell;
    out.levels = levels->parts;
  } else {
    out.diagnostics.push_back("condition 2: no injective integer levels put all blocks on one hyperplane");
  }

  const bool var_sym = is_variable_symmetric(t);
  const bool part_sym = var_sym && is_t_symmetric_partition(t, p);
  out.symmetric = part_sym;
  if (!var_sym) {
    out.diagnostics.push_back("condition 3: tensor is not variable-symmetric in index order");
  } else if (!part_sym) {
    out.diagnostics.push_back("condition 3: partition is not T-symmetric");
  }
  out.ok = out.blocks_matmul && out.on_hyperplane && out.symmetric;
  return out;
}

BoundReport laser_lower_bound(const Tensor& t, const VariablePartition& p, bool assume_degeneration,
                              std::uint64_t seed) {
  const LaserReadiness ready = laser_ready(t, p, assume_degeneration, seed);
  if (!ready.ok) {
    std::string why;
    for (const auto& d : ready.diagnostics) why += (why.empty() ? "" : "; ") + d;
    throw InapplicableError("partition is not laser-ready: " + why);
  }
  const BlockLayout layout = make_layout(t, p);
  const SymmetricResult sym = maximize_symmetric(layout);
  BoundReport r;
  r.quantity = Quantity::slice_rank_lower;
  r.method = "laser";
  r.tight = true;
  r.value = sym.value.value(Axis::X);
  r.distribution = sym.p;
  r.diagnostics = sym.diagnostics;
  r.rates = laser_rates(layout, sym.p);
  r.add("ell", std::to_string(*ready.ell));
  r.add("S~=Q~", r.value);
  r.add("multiplicity_rate", r.rates->multiplicity_log_rate);
  r.add("side_rate", r.rates->side_log_rate);
  r.add("independent_rate", r.rates->independent_log_rate);
  r.add("gap", sym.diagnostics.gap);
  if (ready.degeneration_asserted) r.inputs_asserted.push_back("block degenerations to maximal <a,b,c> (caller supplied)");
  if (t.asymptotic_rank()) r.inputs_asserted.push_back(t.asymptotic_rank()->citation);
  return r;
}

}  // namespace slicerank
