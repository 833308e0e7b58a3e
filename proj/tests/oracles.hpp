#pragma once

// Reference computations written independently of the library internals.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "slicerank/tensor.hpp"

namespace oracle {

using slicerank::Axis;
using slicerank::Rational;
using slicerank::Tensor;

using Matrix = std::vector<std::vector<Rational>>;

/// Rank by textbook Gaussian elimination on a dense matrix of fractions.
inline std::size_t dense_rank(Matrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Dense flattening: rows are the variables of `axis`, columns the pairs of
/// the other two axes in X, Y, Z order.
inline Matrix dense_flattening(const Tensor& t, Axis axis) {
  const auto s = t.sizes();
  const std::size_t a = slicerank::axis_index(axis);
  const std::size_t b = a == 0 ? 1 : 0;
  const std::size_t c = a == 2 ? 1 : 2;
  Matrix m(s[a], std::vector<Rational>(s[b] * s[c], Rational(0)));
  for (const auto& [idx, coeff] : t.entries()) {
    const std::size_t i[3] = {idx.x, idx.y, idx.z};
    m[i[a]][i[b] * s[c] + i[c]] = coeff;
  }
  return m;
}

inline std::size_t rank_of(const Tensor& t, Axis axis) { return dense_rank(dense_flattening(t, axis)); }

/// Random sparse tensor with small integer coefficients.
inline Tensor random_tensor(std::mt19937_64& rng, std::size_t max_side, double density) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Tensor t(side(rng), side(rng), side(rng));
  const auto s = t.sizes();
  for (std::size_t i = 0; i < s[0]; ++i)
    for (std::size_t j = 0; j < s[1]; ++j)
      for (std::size_t k = 0; k < s[2]; ++k)
        if (coin(rng) < density) t.add({i, j, k}, Rational(coeff(rng)));
  return t;
}

/// Random tensor with prescribed sizes.
inline Tensor random_tensor(std::mt19937_64& rng, std::array<std::size_t, 3> s, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Tensor t(s[0], s[1], s[2]);
  for (std::size_t i = 0; i < s[0]; ++i)
    for (std::size_t j = 0; j < s[1]; ++j)
      for (std::size_t k = 0; k < s[2]; ++k)
        if (coin(rng) < density) t.add({i, j, k}, Rational(coeff(rng)));
  return t;
}

/// Root in (0, 1/3) of (4 - q^2) v^2 - (8/3 + q^2/3) v + 4/9 = 0, the stationary
/// point of the CW one-parameter objective.
inline double cw_v(std::size_t q) {
  const double qq = double(q) * double(q);
  const double a = 4.0 - qq, b = -(8.0 / 3.0 + qq / 3.0), c = 4.0 / 9.0;
  if (std::abs(a) < 1e-15) return -c / b;
  const double disc = std::sqrt(b * b - 4.0 * a * c);
  for (double r : {(-b - disc) / (2.0 * a), (-b + disc) / (2.0 * a)})
    if (r > 0.0 && r < 1.0 / 3.0) return r;
  return -1.0;
}

/// q^{2(1/3 - v)} / (v^v (2/3-2v)^{2/3-2v} (1/3+v)^{1/3+v}).
inline double cw_value(std::size_t q, double v) {
  auto pw = [](double x) { return x > 0.0 ? std::pow(x, x) : 1.0; };
  return std::pow(double(q), 2.0 * (1.0 / 3.0 - v)) / (pw(v) * pw(2.0 / 3.0 - 2.0 * v) * pw(1.0 / 3.0 + v));
}

}  // namespace oracle
