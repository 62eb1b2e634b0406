#pragma once

#include <functional>

#include "menv/element.hpp"

namespace menv {

/// Product of two basis monomials in U(M_gamma), returned in PBW normal form.
using MonomialProduct = std::function<Element(const Monomial&, const Monomial&)>;

/// Closed-form structure constants: (a^i b^j c^k d^l e^m)(a^r b^n c^p d^q e^s)
/// as the explicit eleven-fold sum over alpha, beta, kappa, delta, eps, zeta,
/// eta, theta, lambda, mu, nu. The bracket symbols are falling factorials and
/// 0^0 = 1.
Element mul_closed(const Monomial& x, const Monomial& z);

/// Bilinear extension of a monomial product (mul_closed by default).
Element mul(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y, const MonomialProduct& product);

/// x y - y x
Element commutator(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y, const MonomialProduct& product);

/// (x y) z - x (y z)
Element associator(const Element& x, const Element& y, const Element& z);
Element associator(const Element& x, const Element& y, const Element& z,
                   const MonomialProduct& product);

/// Substitutes gamma = gamma0 in every coefficient. Throws std::domain_error
/// for gamma0 == 0, which is excluded from the family.
Element gamma_eval(const Element& x, const Rational& gamma0);

}  // namespace menv
