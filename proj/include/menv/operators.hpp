#pragma once

#include <vector>

#include "menv/element.hpp"

namespace menv {

/// Primitive linear operator on the polynomial algebra P(M).
///
/// multiply: M_x^power, differentiate: D_x^power, shift: S^alpha acting as
/// a -> a + alpha on the a-variable only.
struct PrimitiveOp {
  enum class Kind { multiply, differentiate, shift };

  Kind kind = Kind::multiply;
  Gen gen = Gen::a;
  unsigned power = 1;
  GammaCoeff shift;

  static PrimitiveOp multiply_by(Gen g, unsigned power = 1) {
    return {Kind::multiply, g, power, {}};
  }
  static PrimitiveOp differentiate(Gen g, unsigned power = 1) {
    return {Kind::differentiate, g, power, {}};
  }
  static PrimitiveOp shift_by(const GammaCoeff& alpha) { return {Kind::shift, Gen::a, 1, alpha}; }
};

/// Finite sum of scaled compositions of primitive operators. In each
/// composition the rightmost primitive acts first, so S^{-1} M_d multiplies
/// by d and then shifts. No normal form is kept: two operators are compared
/// by their action (see op_equal_upto).
class CompositeOp {
 public:
  struct Term {
    GammaCoeff scalar;
    std::vector<PrimitiveOp> ops;
  };

  /// The zero operator.
  CompositeOp() = default;
  static CompositeOp identity();
  static CompositeOp primitive(const PrimitiveOp& op);
  static CompositeOp M(Gen g, unsigned power = 1) { return primitive(PrimitiveOp::multiply_by(g, power)); }
  static CompositeOp D(Gen g, unsigned power = 1) { return primitive(PrimitiveOp::differentiate(g, power)); }
  static CompositeOp S(const GammaCoeff& alpha) { return primitive(PrimitiveOp::shift_by(alpha)); }

  const std::vector<Term>& terms() const { return terms_; }
  void add_term(const GammaCoeff& scalar, std::vector<PrimitiveOp> ops);

  Element apply(const Monomial& x) const;
  Element apply(const Element& x) const;

  CompositeOp pow(unsigned n) const;

  CompositeOp& operator+=(const CompositeOp& other);
  CompositeOp& operator-=(const CompositeOp& other);
  CompositeOp& operator*=(const GammaCoeff& c);
  friend CompositeOp operator+(CompositeOp x, const CompositeOp& y) { return x += y; }
  friend CompositeOp operator-(CompositeOp x, const CompositeOp& y) { return x -= y; }
  friend CompositeOp operator*(const GammaCoeff& c, CompositeOp x) { return x *= c; }
  /// Composition: (x * y)(f) = x(y(f)).
  friend CompositeOp operator*(const CompositeOp& x, const CompositeOp& y);

 private:
  std::vector<Term> terms_;
};

inline Element apply(const CompositeOp& op, const Element& x) { return op.apply(x); }

/// [x, y] = x y - y x in the operator algebra.
CompositeOp op_commutator(const CompositeOp& x, const CompositeOp& y);

/// Left multiplication L_s, right multiplication R_s and the adjoint
/// rho_s = R_s - L_s (rho_s(f) = [f, s]) in terms of M, D and S.
CompositeOp left_op(Gen s);
CompositeOp right_op(Gen s);
CompositeOp adjoint_op(Gen s);

/// D_{s,t} = [L_s,L_t] + [L_s,R_t] + [R_s,R_t] as an explicit operator.
/// Only D_{a,b}, D_{a,c}, D_{a,d}, D_{a,e}, D_{b,c} and their negatives are
/// nonzero.
CompositeOp derivation_op(Gen s, Gen t);

/// L_{a^i b^j c^k d^l e^m} as the explicit ten-fold sum over
/// alpha, beta, kappa, delta, eps, zeta, eta, theta, lambda, mu of terms
///   M_a^kappa S^w M_b^eta D_b^(k-alpha-lambda) D_c^(j-alpha-eta)
///   M_c^lambda M_d^(j+k+l-alpha-eta-lambda) M_e^m
/// with w = j+k-l-2alpha-beta-2delta-2eps-2theta-2mu - gamma m.
CompositeOp left_op_monomial(const Monomial& x);

/// Extensional equality: a(z) == b(z) for every monomial z of total degree
/// at most degree_bound.
bool op_equal_upto(const CompositeOp& a, const CompositeOp& b, unsigned degree_bound);

/// All monomials of total degree <= max_degree, in increasing order.
std::vector<Monomial> monomials_up_to_degree(unsigned max_degree);
/// All monomials with every exponent <= max_exp, in increasing order.
std::vector<Monomial> monomials_with_exponents_up_to(unsigned max_exp);

}  // namespace menv
