#include "doctest.h"
#include "slicerank/degeneration.hpp"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/lambda_poly.hpp"
#include "slicerank/partition.hpp"

using namespace slicerank;

TEST_CASE("lambda polynomials") {
  const LambdaPoly a = LambdaPoly::monomial(Rational(2), 1);
  const LambdaPoly b = LambdaPoly::monomial(Rational(1), 0) + LambdaPoly::monomial(Rational(-1), 2);
  const LambdaPoly ab = a * b;
  CHECK(ab.coefficient(1) == 2);
  CHECK(ab.coefficient(3) == -2);
  CHECK(ab.num_terms() == 2);
  CHECK(ab.lowest_degree() == 1);
  LambdaPoly z = a;
  z += LambdaPoly::monomial(Rational(-2), 1);
  CHECK(z.is_zero());
  CHECK(b.substitute_power(3).coefficient(6) == -1);
  CHECK(a.to_string() == "2*L^1");
}

TEST_CASE("identity map verifies at order 0") {
  for (const Tensor& t : {make_cw(2), make_t112(2), make_matmul(2, 1, 3)}) {
    const DegenerationCheck c = verify_degeneration(t, t, identity_map(t.sizes()));
    CHECK(c.ok);
    CHECK(c.diagnostic.empty());
  }
}

TEST_CASE("zeroing CW_q to its blocks") {
  for (std::size_t q = 1; q <= 4; ++q) {
    const Tensor cw = make_cw(q);
    const VariablePartition p = cw_partition(q);
    for (const auto& [key, block] : blocks(cw, p)) {
      std::array<std::vector<bool>, 3> keep;
      for (Axis a : kAxes) {
        keep[axis_index(a)].assign(cw.size(a), false);
        for (std::size_t v : p.part(a, key[axis_index(a)]).members) keep[axis_index(a)][v] = true;
      }
      CHECK(verify_degeneration(cw, block, zeroing_map(keep)).ok);
    }
  }
}

TEST_CASE("failure diagnostics") {
  const Tensor one = make_independent(1);
  DegenerationMap zero;
  zero.kind = DegenerationMap::Kind::zeroing;
  const DegenerationCheck c = verify_degeneration(one, one, zero);
  CHECK_FALSE(c.ok);
  CHECK(c.diagnostic.find("lambda^h coefficient is zero tensor") != std::string::npos);

  // x -> lambda x, y -> y, z -> z against order 0: lambda^0 term vanishes, so
  // the target is not reached at h = 0.
  DegenerationMap shifted = identity_map(one.sizes());
  shifted.maps[0][{0, 0}] = LambdaPoly::monomial(Rational(1), 1);
  CHECK_FALSE(verify_degeneration(one, one, shifted).ok);
  shifted.order = 1;
  CHECK(verify_degeneration(one, one, shifted).ok);

  // Leaving a lower-order term alive is reported.
  DegenerationMap early = identity_map(one.sizes());
  early.order = 1;
  const DegenerationCheck e = verify_degeneration(one, one, early);
  CHECK_FALSE(e.ok);
  CHECK(e.diagnostic.find("lambda^0") != std::string::npos);

  DegenerationMap wild = identity_map(one.sizes());
  wild.maps[0][{3, 0}] = LambdaPoly::monomial(Rational(1), 0);
  CHECK_THROWS_AS(verify_degeneration(one, one, wild), InputError);
}

TEST_CASE("a genuine degeneration with cancellation") {
  // T = x0 y0 z0 + x0 y1 z1 + x1 y0 z1 degenerates to <1> = x y z via
  // x0 -> lambda x, y0 -> y, z1 -> 0, z0 -> z, x1 -> 0, y1 -> 0 at order 1.
  Tensor t(2, 2, 2);
  t.add({0, 0, 0}, 1);
  t.add({0, 1, 1}, 1);
  t.add({1, 0, 1}, 1);
  DegenerationMap d;
  d.maps[0][{0, 0}] = LambdaPoly::monomial(Rational(1), 1);
  d.maps[1][{0, 0}] = LambdaPoly::monomial(Rational(1), 0);
  d.maps[2][{0, 0}] = LambdaPoly::monomial(Rational(1), 0);
  d.order = 1;
  CHECK(verify_degeneration(t, make_independent(1), d).ok);

  // x0 -> x + lambda x', z0 -> lambda z with target x' y z at order 2.
  Tensor target(2, 1, 1);
  target.add({1, 0, 0}, 1);
  DegenerationMap g;
  g.maps[0][{0, 0}] = LambdaPoly::monomial(Rational(1), 0);
  g.maps[0][{0, 1}] = LambdaPoly::monomial(Rational(1), 1);
  g.maps[1][{0, 0}] = LambdaPoly::monomial(Rational(1), 0);
  g.maps[2][{0, 0}] = LambdaPoly::monomial(Rational(1), 1);
  g.order = 2;
  CHECK_FALSE(verify_degeneration(t, target, g).ok);
  g.order = 1;
  const DegenerationCheck c = verify_degeneration(t, target, g);
  CHECK_FALSE(c.ok);
  CHECK(c.diagnostic.find("differs from target") != std::string::npos);
}

TEST_CASE("kind restrictions") {
  DegenerationMap m;
  m.kind = DegenerationMap::Kind::monomial;
  m.maps[0][{0, 0}] = LambdaPoly::monomial(Rational(1), 1);
  CHECK_NOTHROW(m.validate());
  m.maps[0][{0, 1}] = LambdaPoly::monomial(Rational(1), 1);
  CHECK_THROWS_AS(m.validate(), InputError);
  DegenerationMap z;
  z.kind = DegenerationMap::Kind::zeroing;
  z.maps[0][{0, 0}] = LambdaPoly::monomial(Rational(2), 0);
  CHECK_THROWS_AS(z.validate(), InputError);
}

TEST_CASE("composition of a zeroing out and a shift") {
  const Tensor cw = make_cw(2);
  const VariablePartition p = cw_partition(2);
  const BlockSet bs = blocks(cw, p);
  const Tensor corner = bs.at({0, 0, 2});
  std::array<std::vector<bool>, 3> keep{std::vector<bool>{true, false, false, false},
                                        std::vector<bool>{true, false, false, false},
                                        std::vector<bool>{false, false, false, true}};
  const DegenerationMap d1 = zeroing_map(keep);
  REQUIRE(verify_degeneration(cw, corner, d1).ok);
  DegenerationMap d2 = identity_map(corner.sizes());
  d2.maps[2][{3, 3}] = LambdaPoly::monomial(Rational(1), 2);
  d2.order = 2;
  REQUIRE(verify_degeneration(corner, corner, d2).ok);
  const DegenerationMap d = compose(d1, d2);
  CHECK(d.order == 3 * 0 + 2);
  CHECK(verify_degeneration(cw, corner, d).ok);
  CHECK(compose(d1, d1).kind == DegenerationMap::Kind::zeroing);
}

TEST_CASE("zeroing search for independent tensors") {
  for (std::size_t q = 1; q <= 6; ++q) CHECK(search_zeroing_independent(make_independent(q)).size == q);
  const ZeroingSearchResult m = search_zeroing_independent(make_matmul(2, 2, 2));
  CHECK(m.size == 2);
  CHECK(m.terms.size() == 2);
  // Keeping x_0 y_1 z_1 and x_1 y_0 z_0 of CW_1 isolates two terms.
  CHECK(search_zeroing_independent(make_cw(1)).size == 2);
  CHECK(search_zeroing_independent(make_cw(1), 2).size >= 4);
  CHECK_THROWS_AS(search_zeroing_independent(make_cw(3), 2), InputError);
}
