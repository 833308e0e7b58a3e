#include <sstream>

#include "doctest.h"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/text_format.hpp"

using namespace slicerank;

namespace {

std::size_t error_line(const std::string& text, Tensor (*reader)(std::istream&)) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("tensor text round trip") {
  for (const Tensor& t : {make_cw(3), make_t112(2), make_cyclic_lower(4)}) {
    std::ostringstream out;
    write_tensor(out, t);
    std::istringstream in(out.str());
    CHECK(read_tensor(in).same_form(t));
  }
  Tensor frac(1, 2, 1);
  frac.add({0, 1, 0}, Rational(-7, 3));
  std::ostringstream out;
  write_tensor(out, frac);
  std::istringstream in(out.str());
  CHECK(read_tensor(in).coefficient({0, 1, 0}) == Rational(-7, 3));
}

TEST_CASE("tensor reader accepts comments and repeated terms") {
  std::istringstream in("# header\nxvars 1\nyvars 1   # trailing\nzvars 2\n0 0 1 1/2\n0 0 1 1/2\n\n0 0 0 -2\n");
  const Tensor t = read_tensor(in);
  CHECK(t.coefficient({0, 0, 1}) == 1);
  CHECK(t.coefficient({0, 0, 0}) == -2);
}

TEST_CASE("tensor reader reports line numbers") {
  CHECK(error_line("xvars 2\nyvars 2\nzvars 2\n0 0 0 1\n2 0 0 1\n", &read_tensor) == 5);
  CHECK(error_line("xvars 2\nyvars 2\nzvars 2\n0 0 0 1/0\n", &read_tensor) == 4);
  CHECK(error_line("xvars 2\n0 0 0 1\n", &read_tensor) == 2);
  CHECK(error_line("xvars 2\nyvars 2\nzvars 2\n0 0 1\n", &read_tensor) == 4);
  CHECK(error_line("xvars 2\nxvars 3\n", &read_tensor) == 2);
  CHECK(error_line("xvars -1\n", &read_tensor) == 1);
}

TEST_CASE("partition text round trip") {
  const VariablePartition p = cw_partition(4);
  std::ostringstream out;
  write_partition(out, p);
  std::istringstream in(out.str());
  const VariablePartition back = read_partition(in);
  for (Axis a : kAxes) {
    REQUIRE(back.num_parts(a) == p.num_parts(a));
    for (std::size_t i = 0; i < p.num_parts(a); ++i) {
      CHECK(back.part(a, i).label == p.part(a, i).label);
      CHECK(back.part(a, i).members == p.part(a, i).members);
    }
  }
}

TEST_CASE("partition reader errors") {
  std::istringstream bad_axis("w a 0\n");
  CHECK_THROWS_AS(read_partition(bad_axis), ParseError);
  std::istringstream no_members("x a\n");
  CHECK_THROWS_AS(read_partition(no_members), ParseError);
  std::istringstream overlap("x a 0 1\nx b 1\n");
  CHECK_THROWS_AS(read_partition(overlap), ParseError);
}

TEST_CASE("degeneration map text") {
  std::istringstream in(
      "# monomial entries and a polynomial entry\n"
      "alpha 0 0 1 1\n"
      "alpha 0 0 1 1\n"
      "betaP 0 1 0:1 2:-1/2\n"
      "gamma 1 0 0 3\n"
      "order 2\n");
  const DegenerationMap d = read_degeneration_map(in);
  CHECK(d.order == 2);
  CHECK(d.kind == DegenerationMap::Kind::general);
  CHECK(d.maps[0].at({0, 0}).coefficient(1) == 2);
  CHECK(d.maps[1].at({0, 1}).coefficient(2) == Rational(-1, 2));
  CHECK(d.maps[2].at({1, 0}).coefficient(0) == 3);

  std::ostringstream out;
  write_degeneration_map(out, d);
  std::istringstream again(out.str());
  const DegenerationMap back = read_degeneration_map(again);
  CHECK(back.order == d.order);
  for (std::size_t a = 0; a < 3; ++a) CHECK(back.maps[a] == d.maps[a]);
}

TEST_CASE("degeneration map reader errors") {
  std::istringstream unknown("delta 0 0 0 1\n");
  CHECK_THROWS_AS(read_degeneration_map(unknown), ParseError);
  std::istringstream bad_term("alphaP 0 0 1\n");
  CHECK_THROWS_AS(read_degeneration_map(bad_term), ParseError);
  std::istringstream bad_zeroing("kind zeroing\nalpha 0 0 1 1\n");
  CHECK_THROWS_AS(read_degeneration_map(bad_zeroing), ParseError);
  std::istringstream bad_kind("kind sideways\n");
  try {
    read_degeneration_map(bad_kind);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}
