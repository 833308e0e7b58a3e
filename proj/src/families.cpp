#include "slicerank/families.hpp"

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

std::vector<std::string> numbered(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fmt::format("{}_{}", prefix, i));
  return out;
}

void require_positive(std::size_t q, const char* what) {
  if (q == 0) throw InputError(fmt::format("{} needs q >= 1", what));
}

/// Converts the 1-based list into a 0-based permutation of {0..q-1}.
std::vector<std::size_t> checked_permutation(std::size_t q, const Permutation& sigma) {
  std::vector<std::size_t> out(q);
  if (sigma.empty()) {
    for (std::size_t i = 0; i < q; ++i) out[i] = i;
    return out;
  }
  if (sigma.size() != q) throw InputError(fmt::format("sigma has {} entries, expected {}", sigma.size(), q));
  std::vector<bool> hit(q, false);
  for (std::size_t i = 0; i < q; ++i) {
    if (sigma[i] < 1 || sigma[i] > q || hit[sigma[i] - 1]) throw InputError("sigma is not a permutation of 1..q");
    hit[sigma[i] - 1] = true;
    out[i] = sigma[i] - 1;
  }
  return out;
}

void add_cw_middle(Tensor& t, std::size_t q, const std::vector<std::size_t>& sigma) {
  for (std::size_t i = 1; i <= q; ++i) {
    t.add({i, sigma[i - 1] + 1, 0}, 1);
    t.add({i, 0, i}, 1);
    t.add({0, i, i}, 1);
  }
}

}  // namespace

Tensor make_matmul(std::size_t a, std::size_t b, std::size_t c) {
  if (a == 0 || b == 0 || c == 0) throw InputError("matrix multiplication tensor needs positive dimensions");
  std::array<std::vector<std::string>, 3> labels;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) labels[0].push_back(fmt::format("x_{{{},{}}}", i, j));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < c; ++k) labels[1].push_back(fmt::format("y_{{{},{}}}", j, k));
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < a; ++i) labels[2].push_back(fmt::format("z_{{{},{}}}", k, i));
  Tensor t(std::move(labels));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k) t.add({i * b + j, j * c + k, k * a + i}, 1);
  return t;
}

Tensor make_independent(std::size_t q) {
  require_positive(q, "independent tensor");
  Tensor t(q, q, q);
  for (std::size_t i = 0; i < q; ++i) t.add({i, i, i}, 1);
  t.set_asymptotic_rank({static_cast<double>(q), false, "independent tensor: R~(<q>) = q"});
  return t;
}

Tensor make_cw(std::size_t q, const Permutation& sigma) {
  const auto perm = checked_permutation(q, sigma);
  Tensor t(q + 2, q + 2, q + 2);
  t.add({0, 0, q + 1}, 1);
  t.add({0, q + 1, 0}, 1);
  t.add({q + 1, 0, 0}, 1);
  add_cw_middle(t, q, perm);
  t.set_asymptotic_rank({static_cast<double>(q + 2), false,
                         "generalized Coppersmith-Winograd tensor: R~(CW_{q,sigma}) = q+2 (known result)"});
  return t;
}

Tensor make_cw_small(std::size_t q, const Permutation& sigma) {
  require_positive(q, "small Coppersmith-Winograd tensor");
  const auto perm = checked_permutation(q, sigma);
  Tensor t(q + 1, q + 1, q + 1);
  add_cw_middle(t, q, perm);
  t.set_asymptotic_rank({static_cast<double>(q + 1), true,
                         "small Coppersmith-Winograd tensor: R~(cw_{q,sigma}) >= q+1 (known lower bound)"});
  return t;
}

Tensor make_cyclic(std::size_t q) {
  require_positive(q, "cyclic group tensor");
  std::vector<std::string> z(q);
  for (std::size_t s = 0; s < q; ++s) z[(q - s) % q] = fmt::format("z_{}", s);
  Tensor t({numbered('x', q), numbered('y', q), z});
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) t.add({i, j, (2 * q - i - j) % q}, 1);
  t.set_asymptotic_rank({static_cast<double>(q), false, "cyclic group tensor: R~(T_q) = q (known result)"});
  return t;
}

Tensor make_cyclic_lower(std::size_t q) {
  require_positive(q, "lower cyclic tensor");
  std::vector<std::string> z(q);
  for (std::size_t s = 0; s < q; ++s) z[q - 1 - s] = fmt::format("z_{}", s);
  Tensor t({numbered('x', q), numbered('y', q), z});
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; i + j < q; ++j) t.add({i, j, q - 1 - i - j}, 1);
  t.set_asymptotic_rank({static_cast<double>(q), false, "lower cyclic tensor: R~(T_q^lower) = q (known result)"});
  return t;
}

Tensor make_t112(std::size_t q) {
  require_positive(q, "t_112");
  std::vector<std::string> xs, ys, zs;
  for (std::size_t i = 1; i <= q; ++i) {
    xs.push_back(fmt::format("x_{{{},0}}", i));
    ys.push_back(fmt::format("y_{{{},0}}", i));
  }
  for (std::size_t k = 1; k <= q; ++k) {
    xs.push_back(fmt::format("x_{{0,{}}}", k));
    ys.push_back(fmt::format("y_{{0,{}}}", k));
  }
  for (std::size_t i = 1; i <= q; ++i)
    for (std::size_t k = 1; k <= q; ++k) zs.push_back(fmt::format("z_{{{},{}}}", i, k));
  zs.push_back(fmt::format("z_{{0,{}}}", q + 1));
  zs.push_back(fmt::format("z_{{{},0}}", q + 1));
  Tensor t({xs, ys, zs});
  const std::size_t z_0q = q * q, z_q0 = q * q + 1;
  for (std::size_t i = 0; i < q; ++i) t.add({i, i, z_0q}, 1);
  for (std::size_t k = 0; k < q; ++k) t.add({q + k, q + k, z_q0}, 1);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = 0; k < q; ++k) {
      t.add({i, q + k, i * q + k}, 1);
      t.add({q + k, i, i * q + k}, 1);
    }
  }
  return t;
}

}  // namespace slicerank
