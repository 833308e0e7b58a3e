#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "slicerank/rational.hpp"

namespace slicerank {

/// A polynomial in the formal parameter lambda with rational coefficients.
/// Only nonzero coefficients are stored.
class LambdaPoly {
 public:
  using TermMap = std::map<std::size_t, Rational>;

  LambdaPoly() = default;
  LambdaPoly(const Rational& c);  // NOLINT: constants convert implicitly
  static LambdaPoly monomial(const Rational& c, std::size_t exponent);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  Rational coefficient(std::size_t exponent) const;
  /// Smallest exponent with a nonzero coefficient; requires !is_zero().
  std::size_t lowest_degree() const { return terms_.begin()->first; }

  void add_term(std::size_t exponent, const Rational& c);

  /// p(lambda^m).
  LambdaPoly substitute_power(std::size_t m) const;

  LambdaPoly& operator+=(const LambdaPoly& other);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

  /// "c*L^e + ..." with exponents ascending; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace slicerank
