#pragma once

#include <string>
#include <vector>

#include "menv/rational.hpp"

namespace menv {

/// Polynomial in the family parameter gamma with rational coefficients.
///
/// coeffs()[t] is the coefficient of gamma^t. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and equality is
/// plain vector equality.
class GammaCoeff {
 public:
  GammaCoeff() = default;
  GammaCoeff(int c) : GammaCoeff(Rational(c)) {}
  GammaCoeff(long c) : GammaCoeff(Rational(c)) {}
  GammaCoeff(const Rational& c);
  explicit GammaCoeff(std::vector<Rational> coeffs);

  /// c * gamma^t
  static GammaCoeff monomial(unsigned t, const Rational& c = 1);
  static GammaCoeff gamma() { return monomial(1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of gamma^t (zero past the end).
  Rational coeff(std::size_t t) const;
  /// Highest power present; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& gamma) const;
  GammaCoeff pow(unsigned n) const;

  GammaCoeff& operator+=(const GammaCoeff& other);
  GammaCoeff& operator-=(const GammaCoeff& other);
  GammaCoeff& operator*=(const GammaCoeff& other);
  GammaCoeff& operator*=(const Rational& c);

  friend GammaCoeff operator+(GammaCoeff x, const GammaCoeff& y) { return x += y; }
  friend GammaCoeff operator-(GammaCoeff x, const GammaCoeff& y) { return x -= y; }
  friend GammaCoeff operator*(GammaCoeff x, const GammaCoeff& y) { return x *= y; }
  friend GammaCoeff operator-(GammaCoeff x) {
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }
  friend bool operator==(const GammaCoeff& x, const GammaCoeff& y) {
    return x.coeffs_ == y.coeffs_;
  }

  /// Human readable form, e.g. "-3", "g", "2/3 g^2 - 1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace menv
