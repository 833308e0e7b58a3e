#include "slicerank/lambda_poly.hpp"

namespace slicerank {

LambdaPoly::LambdaPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LambdaPoly LambdaPoly::monomial(const Rational& c, std::size_t exponent) {
  LambdaPoly p;
  p.add_term(exponent, c);
  return p;
}

Rational LambdaPoly::coefficient(std::size_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LambdaPoly::add_term(std::size_t exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LambdaPoly LambdaPoly::substitute_power(std::size_t m) const {
  LambdaPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * m, c);
  return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  LambdaPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LambdaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += slicerank::to_string(c);
    if (e > 0) out += "*L^" + std::to_string(e);
  }
  return out;
}

}  // namespace slicerank
