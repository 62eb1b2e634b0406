#include "menv/gamma_coeff.hpp"

#include <stdexcept>

#include "menv/combination.hpp"
#include "menv/gamma_mode.hpp"

namespace menv {

GammaCoeff::GammaCoeff(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

GammaCoeff::GammaCoeff(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GammaCoeff GammaCoeff::monomial(unsigned t, const Rational& c) {
  GammaCoeff x;
  if (c == 0) return x;
  x.coeffs_.assign(t + 1, Rational(0));
  x.coeffs_[t] = c;
  return x;
}

Rational GammaCoeff::coeff(std::size_t t) const {
  return t < coeffs_.size() ? coeffs_[t] : Rational(0);
}

Rational GammaCoeff::evaluate(const Rational& gamma) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + *it;
  return acc;
}

GammaCoeff GammaCoeff::pow(unsigned n) const {
  GammaCoeff result(1);
  for (unsigned i = 0; i < n; ++i) result *= *this;
  return result;
}

GammaCoeff& GammaCoeff::operator+=(const GammaCoeff& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t t = 0; t < other.coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  trim();
  return *this;
}

GammaCoeff& GammaCoeff::operator-=(const GammaCoeff& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t t = 0; t < other.coeffs_.size(); ++t) coeffs_[t] -= other.coeffs_[t];
  trim();
  return *this;
}

GammaCoeff& GammaCoeff::operator*=(const GammaCoeff& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (other.coeffs_.size() == 1) return *this *= other.coeffs_[0];
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] == 0) continue;
    for (std::size_t t = 0; t < other.coeffs_.size(); ++t) out[s + t] += coeffs_[s] * other.coeffs_[t];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

GammaCoeff& GammaCoeff::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void GammaCoeff::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string GammaCoeff::to_string() const {
  if (is_zero()) return "0";
  return detail::format_terms({{"1", *this}});
}

GammaMode GammaMode::instantiated(const Rational& gamma0) {
  if (gamma0 == 0) throw std::domain_error("gamma must be nonzero");
  GammaMode mode;
  mode.value_ = gamma0;
  return mode;
}

GammaMode GammaMode::parse(const std::string& text) {
  if (text == "symbolic") return symbolic();
  return instantiated(parse_rational(text));
}

std::string GammaMode::to_string() const {
  return is_symbolic() ? std::string("symbolic") : menv::to_string(*value_);
}

}  // namespace menv
