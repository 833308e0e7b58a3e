#include "slicerank/rank.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "slicerank/error.hpp"
#include "slicerank/families.hpp"

namespace slicerank {
namespace {

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

SparseRow to_integer_row(std::vector<std::pair<std::size_t, Rational>> row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  BigInt scale = 1;
  for (const auto& [col, v] : row) scale = boost::multiprecision::lcm(scale, denominator(v));
  SparseRow out;
  for (const auto& [col, v] : row) {
    if (v == 0) continue;
    if (!out.empty() && out.back().first == col) {
      throw InputError("duplicate column in sparse row");
    }
    out.emplace_back(col, numerator(v) * (scale / denominator(v)));
  }
  return out;
}

BigInt coefficient_at(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : BigInt(0);
}

/// (piv * s - a * r) / prev, merged column by column. The division is exact.
SparseRow bareiss_update(const SparseRow& s, const SparseRow& r, const BigInt& piv, const BigInt& a,
                         const BigInt& prev) {
  SparseRow out;
  out.reserve(s.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < s.size() || j < r.size()) {
    BigInt v;
    std::size_t col;
    if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
      col = s[i].first;
      v = piv * s[i++].second;
    } else if (i == s.size() || r[j].first < s[i].first) {
      col = r[j].first;
      v = -a * r[j++].second;
    } else {
      col = s[i].first;
      v = piv * s[i++].second - a * r[j++].second;
    }
    if (v != 0) out.emplace_back(col, v / prev);
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

/// Connected components of the bipartite co-occurrence graph between two axes.
/// Returns component ids numbered by first appearance, for the nodes of `first`
/// followed by the nodes of `second`, and the number of components.
std::pair<std::vector<std::size_t>, std::size_t> co_occurrence_components(const Tensor& t, Axis first, Axis second) {
  const std::size_t n1 = t.size(first), n2 = t.size(second);
  UnionFind uf(n1 + n2);
  for (const auto& [idx, c] : t.entries()) uf.unite(idx[first], n1 + idx[second]);
  std::vector<std::size_t> id_of_root(n1 + n2, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> comp(n1 + n2);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n1 + n2; ++v) {
    auto& id = id_of_root[uf.find(v)];
    if (id == std::numeric_limits<std::size_t>::max()) id = count++;
    comp[v] = id;
  }
  return {comp, count};
}

}  // namespace

std::size_t exact_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows) {
  std::vector<SparseRow> active;
  for (const auto& row : rows) {
    SparseRow r = to_integer_row(row);
    if (!r.empty()) active.push_back(std::move(r));
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  while (!active.empty()) {
    auto pivot_it = std::min_element(active.begin(), active.end(),
                                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    const SparseRow pivot_row = std::move(*pivot_it);
    active.erase(pivot_it);
    const std::size_t col = pivot_row.front().first;
    const BigInt piv = pivot_row.front().second;
    std::vector<SparseRow> next;
    next.reserve(active.size());
    for (const SparseRow& s : active) {
      SparseRow updated = bareiss_update(s, pivot_row, piv, coefficient_at(s, col), prev);
      if (!updated.empty()) next.push_back(std::move(updated));
    }
    active = std::move(next);
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t flattening_rank(const Tensor& t, Axis axis) {
  const std::size_t a = axis_index(axis);
  const Axis second = kAxes[(a + 1) % 3];
  const Axis third = kAxes[(a + 2) % 3];
  const std::size_t n3 = t.size(third);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(t.size(axis));
  for (const auto& [idx, c] : t.entries()) rows[idx[axis]].emplace_back(idx[second] * n3 + idx[third], c);
  return exact_rank(rows);
}

std::size_t m_value(const Tensor& t) {
  return std::max({x_rank(t), y_rank(t), z_rank(t)});
}

std::size_t slice_rank_upper_trivial(const Tensor& t) {
  return std::min({x_rank(t), y_rank(t), z_rank(t)});
}

std::uint64_t measure(const Tensor& t) {
  const Tensor trimmed = trim(t).tensor;
  std::uint64_t out = 1;
  for (Axis a : kAxes) {
    const std::uint64_t n = trimmed.size(a);
    if (n != 0 && out > std::numeric_limits<std::uint64_t>::max() / n) {
      throw InputError("measure overflows 64 bits");
    }
    out *= n;
  }
  return out;
}

std::optional<MatmulShape> recognize_matmul(const Tensor& t) {
  if (t.is_zero() || !is_minimal(t)) return std::nullopt;
  const Rational scale = t.entries().begin()->second;
  for (const auto& [idx, c] : t.entries()) {
    if (c != scale) return std::nullopt;
  }
  const auto [xy, b] = co_occurrence_components(t, Axis::X, Axis::Y);
  const auto [yz, c] = co_occurrence_components(t, Axis::Y, Axis::Z);
  const auto [zx, a] = co_occurrence_components(t, Axis::Z, Axis::X);
  const std::size_t nx = t.size(Axis::X), ny = t.size(Axis::Y), nz = t.size(Axis::Z);
  if (nx != a * b || ny != b * c || nz != c * a || t.num_entries() != a * b * c) return std::nullopt;

  MatmulShape shape{a, b, c, {}, scale};
  auto& w = shape.witness;
  w[0].resize(nx);
  w[1].resize(ny);
  w[2].resize(nz);
  for (std::size_t x = 0; x < nx; ++x) w[0][x] = zx[nz + x] * b + xy[x];
  for (std::size_t y = 0; y < ny; ++y) w[1][y] = xy[nx + y] * c + yz[y];
  for (std::size_t z = 0; z < nz; ++z) w[2][z] = yz[ny + z] * a + zx[z];
  for (const auto& m : w) {
    std::vector<bool> hit(m.size(), false);
    for (std::size_t v : m) {
      if (v >= m.size() || hit[v]) return std::nullopt;
      hit[v] = true;
    }
  }
  const Tensor mapped = relabel(t, w);
  const Tensor target = make_matmul(a, b, c);
  for (const auto& [idx, coeff] : target.entries()) {
    if (mapped.coefficient(idx) != scale) return std::nullopt;
  }
  return shape;
}

}  // namespace slicerank
