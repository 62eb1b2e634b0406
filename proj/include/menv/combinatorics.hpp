#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "menv/rational.hpp"

namespace menv {

Integer factorial(unsigned n);
/// C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);
/// n! / (p1! ... pr! (n - p1 - ... - pr)!); zero when the parts exceed n.
Integer multinomial(unsigned n, std::initializer_list<unsigned> parts);
/// n (n-1) ... (n-r+1); 1 when r = 0, 0 when r > n.
Integer falling_factorial(unsigned n, unsigned r);
/// Stirling number of the second kind {r over s}; {0 over 0} = 1.
Integer stirling2(unsigned r, unsigned s);

/// Integer polynomial in one indeterminate, trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(const Integer& c) { return IntPoly({c}); }
  /// The indeterminate itself.
  static IntPoly variable() { return IntPoly({0, 1}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer evaluate(const Integer& u) const;

  IntPoly& operator+=(const IntPoly& other);
  friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.coeffs_ == y.coeffs_; }

  std::string to_string(char var = 'u') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// X_i(kappa, delta, eps) from the left-multiplication operator of a^i,
/// as a polynomial in u = alpha - beta, via the Stirling-number closed form.
/// Zero unless 0 <= kappa <= i, 0 <= delta <= i - kappa and
/// 0 <= eps <= i - kappa - delta.
IntPoly x_poly(int i, int kappa, int delta, int eps);

/// Same polynomial from X_0(0,0,0) = 1 and
/// X_{i+1}(k,d,e) = (u+d+e) X_i(k,d,e) + X_i(k-1,d,e) + X_i(k,d-1,e) + X_i(k,d,e-1).
IntPoly x_poly_by_recurrence(int i, int kappa, int delta, int eps);

}  // namespace menv
