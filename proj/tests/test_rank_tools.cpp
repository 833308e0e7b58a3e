#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/partition.hpp"
#include "slicerank/rank.hpp"

using namespace slicerank;

TEST_CASE("exact_rank on explicit rows") {
  using Row = std::vector<std::pair<std::size_t, Rational>>;
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({Row{{0, 1}, {1, 2}}, Row{{0, 2}, {1, 4}}}) == 1);
  CHECK(exact_rank({Row{{0, Rational(1, 2)}}, Row{{1, Rational(1, 3)}}, Row{{0, 1}, {1, 1}}}) == 2);
  CHECK(exact_rank({Row{}, Row{{3, 5}}}) == 1);
}

TEST_CASE("flattening ranks of matmul and independent tensors") {
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c) {
        const Tensor t = make_matmul(a, b, c);
        CHECK(x_rank(t) == a * b);
        CHECK(y_rank(t) == b * c);
        CHECK(z_rank(t) == c * a);
        CHECK(slice_rank_upper_trivial(t) == std::min({a * b, b * c, c * a}));
      }
  for (std::size_t q = 1; q <= 6; ++q) {
    CHECK(x_rank(make_independent(q)) == q);
    CHECK(m_value(make_independent(q)) == q);
    CHECK(slice_rank_upper_trivial(make_independent(q)) == q);
  }
}

TEST_CASE("flattening ranks agree with the dense oracle on the families") {
  std::vector<Tensor> ts;
  for (std::size_t q = 1; q <= 5; ++q) {
    ts.push_back(make_cw(q));
    ts.push_back(make_cw_small(q));
    ts.push_back(make_cyclic(q));
    ts.push_back(make_cyclic_lower(q));
    ts.push_back(make_t112(q));
  }
  for (const Tensor& t : ts)
    for (Axis a : kAxes) CHECK(flattening_rank(t, a) == oracle::rank_of(t, a));
  for (std::size_t q = 1; q <= 6; ++q) CHECK(x_rank(make_cw(q)) == q + 2);
}

TEST_CASE("m_value") {
  CHECK(m_value(make_matmul(2, 3, 4)) == 12);
  const Tensor cw2 = make_cw(2);
  CHECK(m_value(cw2) == std::max({oracle::rank_of(cw2, Axis::X), oracle::rank_of(cw2, Axis::Y),
                                  oracle::rank_of(cw2, Axis::Z)}));
  CHECK(m_value(cw2) == 4);
  CHECK(slice_rank_upper_trivial(make_cw(1)) == 3);
}

TEST_CASE("measure trims first") {
  for (std::size_t q = 1; q <= 6; ++q) {
    CHECK(measure(make_independent(q)) == q * q * q);
    CHECK(measure(make_cw(q)) == (q + 2) * (q + 2) * (q + 2));
  }
  CHECK(measure(make_t112(2)) == 4 * 4 * 6);
  Tensor padded(5, 5, 5);
  padded.add({1, 2, 3}, 1);
  CHECK(measure(padded) == 1);
}

TEST_CASE("recognize_matmul on CW blocks") {
  for (std::size_t q = 1; q <= 5; ++q) {
    const Tensor cw = make_cw(q);
    const BlockSet bs = blocks(cw, cw_partition(q));
    const auto shape = recognize_matmul(trim(bs.at({0, 1, 1})).tensor);
    REQUIRE(shape);
    CHECK(shape->a * shape->b * shape->c == q);
    CHECK(shape->a * shape->b == 1);
    const auto corner = recognize_matmul(trim(bs.at({0, 0, 2})).tensor);
    REQUIRE(corner);
    CHECK(corner->a * corner->b * corner->c == 1);
  }
  CHECK_FALSE(recognize_matmul(make_cw(1)));
  CHECK_FALSE(recognize_matmul(make_cw(3)));
}

TEST_CASE("recognize_matmul through a scrambled relabeling") {
  std::mt19937_64 rng(7);
  const Tensor t = make_matmul(2, 3, 4);
  Relabeling r;
  for (Axis a : kAxes) {
    r[axis_index(a)].resize(t.size(a));
    std::iota(r[axis_index(a)].begin(), r[axis_index(a)].end(), 0);
    std::shuffle(r[axis_index(a)].begin(), r[axis_index(a)].end(), rng);
  }
  const Tensor scrambled = relabel(t, r);
  const auto shape = recognize_matmul(scrambled);
  REQUIRE(shape);
  CHECK(shape->a == 2);
  CHECK(shape->b == 3);
  CHECK(shape->c == 4);
  Tensor scaled = make_matmul(shape->a, shape->b, shape->c);
  Tensor expected(scaled.sizes()[0], scaled.sizes()[1], scaled.sizes()[2]);
  for (const auto& [idx, c] : scaled.entries()) expected.add(idx, c * shape->scale);
  CHECK(relabel(scrambled, shape->witness).same_form(expected));
}

TEST_CASE("recognize_matmul rejects unequal coefficients and non-minimal tensors") {
  Tensor t = make_matmul(1, 2, 1);
  t.add({0, 0, 0}, 1);
  CHECK_FALSE(recognize_matmul(t));
  Tensor padded(2, 1, 1);
  padded.add({0, 0, 0}, 1);
  CHECK_FALSE(recognize_matmul(padded));
}
