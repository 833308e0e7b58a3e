#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/partition.hpp"
#include "slicerank/rational.hpp"
#include "slicerank/tensor.hpp"

using namespace slicerank;

namespace {

/// Entries of the CW formula, enumerated from the three corner terms and the
/// three middle sums.
std::set<std::array<std::size_t, 3>> cw_terms(std::size_t q, const Permutation& sigma) {
  std::set<std::array<std::size_t, 3>> out{{0, 0, q + 1}, {0, q + 1, 0}, {q + 1, 0, 0}};
  for (std::size_t i = 1; i <= q; ++i) {
    const std::size_t s = sigma.empty() ? i : sigma[i - 1];
    out.insert({i, s, 0});
    out.insert({i, 0, i});
    out.insert({0, i, i});
  }
  return out;
}

std::set<std::array<std::size_t, 3>> support(const Tensor& t) {
  std::set<std::array<std::size_t, 3>> out;
  for (const auto& [idx, c] : t.entries()) out.insert({idx.x, idx.y, idx.z});
  return out;
}

}  // namespace

TEST_CASE("rationals parse integers and fractions exactly") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("tensor entries cancel eagerly") {
  Tensor t(2, 2, 2);
  t.add({0, 0, 0}, 1);
  t.add({0, 0, 0}, -1);
  CHECK(t.is_zero());
  t.add({1, 0, 1}, Rational(2, 3));
  CHECK(t.coefficient({1, 0, 1}) == Rational(2, 3));
  CHECK(t.coefficient({0, 0, 0}) == 0);
}

TEST_CASE("make_matmul sizes and entry counts") {
  const Tensor one = make_matmul(1, 1, 1);
  CHECK(one.sizes() == std::array<std::size_t, 3>{1, 1, 1});
  CHECK(one.num_entries() == 1);
  const Tensor m222 = make_matmul(2, 2, 2);
  CHECK(m222.num_entries() == 8);
  CHECK(m222.sizes() == std::array<std::size_t, 3>{4, 4, 4});
  const Tensor m234 = make_matmul(2, 3, 4);
  std::size_t loops = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        ++loops;
        CHECK(m234.coefficient({i * 3 + j, j * 4 + k, k * 2 + i}) == 1);
      }
  CHECK(m234.num_entries() == loops);
  CHECK(m234.sizes() == std::array<std::size_t, 3>{6, 12, 8});
  CHECK_THROWS_AS(make_matmul(0, 1, 1), InputError);
}

TEST_CASE("make_independent is diagonal") {
  CHECK(make_independent(1).same_form(make_matmul(1, 1, 1)));
  const Tensor d3 = make_independent(3);
  CHECK(d3.num_entries() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d3.coefficient({i, i, i}) == 1);
  const auto m = oracle::dense_flattening(d3, Axis::X);
  CHECK(m.size() == 3);
  CHECK(m[0].size() == 9);
  CHECK(oracle::dense_rank(m) == 3);
  const Tensor d5 = make_independent(5);
  for (Axis a : kAxes) CHECK(oracle::rank_of(d5, a) == 5);
}

TEST_CASE("make_cw matches the enumerated formula") {
  const Tensor cw0 = make_cw(0);
  CHECK(cw0.num_entries() == 3);
  CHECK(support(cw0) == cw_terms(0, {}));
  for (std::size_t q = 1; q <= 6; ++q) {
    const Tensor t = make_cw(q);
    CHECK(t.num_entries() == 3 * q + 3);
    CHECK(support(t) == cw_terms(q, {}));
    REQUIRE(t.asymptotic_rank());
    CHECK(t.asymptotic_rank()->value == double(q + 2));
    CHECK_FALSE(t.asymptotic_rank()->lower_bound_only);
  }
  const Tensor swapped = make_cw(2, {2, 1});
  CHECK(swapped.num_entries() == 9);
  CHECK(support(swapped) == cw_terms(2, {2, 1}));
  CHECK(support(swapped) != support(make_cw(2)));
  CHECK_THROWS_AS(make_cw(2, {1, 1}), InputError);
  CHECK_THROWS_AS(make_cw(2, {1}), InputError);
}

TEST_CASE("make_cw_small entry counts and rank metadata") {
  CHECK(make_cw_small(1).num_entries() == 3);
  const Tensor t2 = make_cw_small(2);
  CHECK(t2.num_entries() == 6);
  CHECK(oracle::rank_of(t2, Axis::X) == 3);
  CHECK(make_cw_small(7).num_entries() == 21);
  REQUIRE(t2.asymptotic_rank());
  CHECK(t2.asymptotic_rank()->value == 3.0);
  CHECK(t2.asymptotic_rank()->lower_bound_only);
}

TEST_CASE("cyclic tensors") {
  CHECK(make_cyclic(1).num_entries() == 1);
  CHECK(make_cyclic(4).num_entries() == 16);
  const Tensor lower = make_cyclic_lower(3);
  CHECK(lower.num_entries() == 6);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; i + j <= 2; ++j) ++expected;
  CHECK(expected == 6);
  for (std::size_t q = 1; q <= 6; ++q) {
    CHECK(is_variable_symmetric(make_cyclic(q)));
    CHECK(is_variable_symmetric(make_cyclic_lower(q)));
  }
}

TEST_CASE("make_t112 entry counts") {
  CHECK(make_t112(1).num_entries() == 4);
  const Tensor t2 = make_t112(2);
  CHECK(t2.num_entries() == 12);
  CHECK(t2.size(Axis::Z) == 6);
  CHECK(make_t112(3).num_entries() == 24);
  for (std::size_t q = 1; q <= 5; ++q) CHECK(make_t112(q).num_entries() == 2 * q * q + 2 * q);
}

TEST_CASE("tensor_product") {
  const Tensor a = make_cw(1);
  CHECK(tensor_product(a, make_matmul(1, 1, 1)).same_form(a));

  // <2,2,2> (x) <2,2,2> relabeled canonically is <4,4,4>.
  const Tensor p = tensor_product(make_matmul(2, 2, 2), make_matmul(2, 2, 2));
  Relabeling r;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    r[axis].assign(16, 0);
    for (std::size_t u1 = 0; u1 < 2; ++u1)
      for (std::size_t v1 = 0; v1 < 2; ++v1)
        for (std::size_t u2 = 0; u2 < 2; ++u2)
          for (std::size_t v2 = 0; v2 < 2; ++v2) {
            // Source index in the product: (u1 * 2 + v1) * 4 + (u2 * 2 + v2).
            // Target index in <4,4,4>: (2 u1 + u2) * 4 + (2 v1 + v2).
            r[axis][(u1 * 2 + v1) * 4 + (u2 * 2 + v2)] = (2 * u1 + u2) * 4 + (2 * v1 + v2);
          }
  }
  CHECK(relabel(p, r).same_form(make_matmul(4, 4, 4)));

  const Tensor b = make_cw_small(2);
  CHECK(tensor_product(a, b).num_entries() == a.num_entries() * b.num_entries());
  CHECK(tensor_product(a, b).sizes() == std::array<std::size_t, 3>{3 * 3, 3 * 3, 3 * 3});
}

TEST_CASE("tensor_power respects the cap") {
  const Tensor t = make_cw(1);
  CHECK(tensor_power(t, 1).same_form(t));
  CHECK(tensor_power(t, 2).same_form(tensor_product(t, t)));
  CHECK(tensor_power(t, 3).num_entries() == 216);
  CHECK_THROWS_AS(tensor_power(t, 4), InputError);
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(make_independent(1), make_independent(1)).same_form(make_independent(2)));
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t q = 1; q <= 4; ++q) CHECK(n_copies(m, make_independent(q)).same_form(make_independent(m * q)));
  const Tensor a = make_cw(2), b = make_t112(2);
  const Tensor s = direct_sum(a, b);
  for (Axis ax : kAxes) CHECK(s.size(ax) == a.size(ax) + b.size(ax));
  CHECK(s.num_entries() == a.num_entries() + b.num_entries());
}

TEST_CASE("rotation") {
  CHECK(rotate(make_independent(4)).same_form(make_independent(4)));
  CHECK(rotate(make_matmul(2, 3, 4)).same_form(make_matmul(3, 4, 2)));
  const Tensor t = make_t112(2);
  CHECK(rotate(rotate(rotate(t))) == t);
  CHECK(rotate(t).size(Axis::X) == t.size(Axis::Y));
}

TEST_CASE("variable symmetry") {
  for (std::size_t q = 0; q <= 5; ++q) CHECK(is_variable_symmetric(make_cw(q)));
  CHECK_FALSE(is_variable_symmetric(make_matmul(2, 3, 4)));
  CHECK_FALSE(is_variable_symmetric(make_t112(2)));
  CHECK(is_variable_symmetric(cyclic_product(make_t112(1))));
  CHECK(is_variable_symmetric(cyclic_product(make_t112(2))));
}

TEST_CASE("minimality, restriction and trimming") {
  Tensor t(3, 3, 3);
  t.add({0, 1, 2}, 1);
  t.add({2, 1, 0}, 1);
  CHECK_FALSE(is_minimal(t));
  const Trimmed tr = trim(t);
  CHECK(is_minimal(tr.tensor));
  CHECK(tr.tensor.sizes() == std::array<std::size_t, 3>{2, 1, 2});
  CHECK(tr.kept[0] == std::vector<std::size_t>{0, 2});
  CHECK(is_minimal(make_cw(3)));
  const Tensor r = restrict_to(make_cw(2), {std::vector<bool>{true, false, false, false},
                                            std::vector<bool>(4, true), std::vector<bool>(4, true)});
  CHECK(r.sizes() == make_cw(2).sizes());
  CHECK(r.num_entries() == 4);  // x_0 y_0 z_3, x_0 y_3 z_0, x_0 y_1 z_1, x_0 y_2 z_2
}

TEST_CASE("partitions validate their input") {
  CHECK_THROWS_AS(VariablePartition({std::vector<Part>{{"a", {}}}, {}, {}}), InputError);
  CHECK_THROWS_AS(VariablePartition({std::vector<Part>{{"a", {0, 1}}, {"b", {1}}}, {}, {}}), InputError);
  const VariablePartition p = cw_partition(2);
  CHECK_NOTHROW(p.validate({4, 4, 4}));
  CHECK_THROWS_AS(p.validate({5, 4, 4}), InputError);
  CHECK(p.part_of(Axis::Y, 2) == 1);
}

TEST_CASE("blocks") {
  const Tensor cw = make_cw(3);
  const BlockSet whole = blocks(cw, trivial_partition(cw.sizes()));
  REQUIRE(whole.size() == 1);
  CHECK(whole.begin()->second.same_form(cw));

  const BlockSet b = blocks(cw, cw_partition(3));
  std::set<BlockKey> keys;
  for (const auto& [k, _] : b) keys.insert(k);
  CHECK(keys == std::set<BlockKey>{{0, 0, 2}, {0, 2, 0}, {2, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(reconstruct(cw, b).same_form(cw));

  const Tensor t = make_t112(2);
  std::set<BlockKey> tkeys;
  for (const auto& [k, _] : blocks(t, t112_partition(2))) tkeys.insert(k);
  CHECK(tkeys == std::set<BlockKey>{{0, 0, 1}, {1, 1, 2}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("T-symmetric partitions") {
  CHECK(is_t_symmetric_partition(make_cw(3), cw_partition(3)));
  CHECK(is_t_symmetric_partition(make_cw_small(3), cw_small_partition(3)));
  // X_0 and X_2 merged on X only: part sizes differ across axes.
  const Tensor cw = make_cw(2);
  const VariablePartition merged({std::vector<Part>{{"02", {0, 3}}, {"1", {1, 2}}},
                                  std::vector<Part>{{"0", {0}}, {"1", {1, 2}}, {"2", {3}}},
                                  std::vector<Part>{{"0", {0}}, {"1", {1, 2}}, {"2", {3}}}});
  CHECK_FALSE(is_t_symmetric_partition(cw, merged));
  const Tensor ts = cyclic_product(make_t112(2));
  CHECK(is_t_symmetric_partition(ts, cyclic_product_partition(make_t112(2), t112_partition(2))));
}
