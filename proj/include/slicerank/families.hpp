#pragma once

#include <cstddef>
#include <vector>

#include "slicerank/tensor.hpp"

namespace slicerank {

/// <a,b,c> = sum x_{ij} y_{jk} z_{ki}. Index layout: x_{ij} at i*b+j, y_{jk} at
/// j*c+k, z_{ki} at k*a+i, so rotate(<a,b,c>) equals <b,c,a> exactly.
Tensor make_matmul(std::size_t a, std::size_t b, std::size_t c);

/// <q> = sum x_i y_i z_i.
Tensor make_independent(std::size_t q);

/// A permutation of {1..q} given as the list (sigma(1), ..., sigma(q)).
/// An empty list stands for the identity.
using Permutation = std::vector<std::size_t>;

/// Generalized Coppersmith-Winograd tensor on variables 0..q+1 per axis.
Tensor make_cw(std::size_t q, const Permutation& sigma = {});

/// The same without the three corner terms, on variables 0..q per axis.
Tensor make_cw_small(std::size_t q, const Permutation& sigma = {});

/// Structural tensor of the cyclic group C_q. The z-variable z_s sits at
/// index (-s mod q), so the stored form is symmetric in index order.
Tensor make_cyclic(std::size_t q);

/// Terms of the cyclic tensor with i + j <= q-1. z_s sits at index q-1-s.
Tensor make_cyclic_lower(std::size_t q);

/// The subtensor t_112 of CW_q^{(x)2}. x-variables are x_{i,0} (i = 1..q)
/// followed by x_{0,k} (k = 1..q), likewise for y. z-variables are z_{i,k}
/// at (i-1)q+(k-1), then z_{0,q+1}, then z_{q+1,0}.
Tensor make_t112(std::size_t q);

}  // namespace slicerank
