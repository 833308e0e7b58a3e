#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slicerank/lambda_poly.hpp"
#include "slicerank/tensor.hpp"

namespace slicerank {

/// Substitutions x -> sum_{x'} alpha(x, x') x' (and beta, gamma for Y, Z) that
/// take a tensor over X1, Y1, Z1 to one over X2, Y2, Z2, together with the
/// order h at which the target is read off.
struct DegenerationMap {
  enum class Kind { general, monomial, zeroing };

  /// Per axis: (source variable, target variable) -> polynomial. Absent pairs are 0.
  using AxisMap = std::map<std::pair<std::size_t, std::size_t>, LambdaPoly>;

  std::array<AxisMap, 3> maps;
  std::size_t order = 0;
  Kind kind = Kind::general;

  /// Throws InputError if the entries violate the restrictions of `kind`.
  void validate() const;
};

const char* kind_name(DegenerationMap::Kind kind);

struct DegenerationCheck {
  bool ok = false;
  std::string diagnostic;  // empty when ok
};

/// Substitutes D into t1 and checks that the lambda^h coefficient equals t2
/// while every lower coefficient vanishes. Throws InputError when D refers to
/// variables outside t1 or t2.
DegenerationCheck verify_degeneration(const Tensor& t1, const Tensor& t2, const DegenerationMap& d);

/// The identity substitution on the given axis sizes, order 0.
DegenerationMap identity_map(const std::array<std::size_t, 3>& axis_sizes);

/// The zeroing out that keeps the marked variables (identity on them) and
/// sends all others to 0.
DegenerationMap zeroing_map(const std::array<std::vector<bool>, 3>& keep);

/// Given d1 : T1 -> T2 and d2 : T2 -> T3, a map T1 -> T3. d1 is reparametrized
/// by lambda -> lambda^(h2+1), giving order (h2+1) h1 + h2.
DegenerationMap compose(const DegenerationMap& d1, const DegenerationMap& d2);

struct ZeroingSearchResult {
  std::size_t size = 0;  // q of the independent tensor <q> found
  std::array<std::vector<std::size_t>, 3> kept;  // variables of T^{(x)n} kept
  std::vector<Index3> terms;  // the q surviving terms
};

/// Largest q such that zeroing out variables of t^{(x)n} leaves a tensor
/// isomorphic to <q> (up to coefficient scaling). Exact branch and bound.
/// Refuses (InputError) when an axis of t^{(x)n} exceeds `cap` variables.
ZeroingSearchResult search_zeroing_independent(const Tensor& t, std::size_t n = 1, std::size_t cap = 12);

}  // namespace slicerank
