#pragma once

#include "menv/combination.hpp"
#include "menv/monomial.hpp"

namespace menv {

/// General element of U(M_gamma) in the left-tapped PBW basis.
using Element = Combination<Monomial>;

inline Element generator(Gen g) { return Element(Monomial::of(g)); }
inline Element scalar(const GammaCoeff& c) { return Element(Monomial::unit(), c); }

/// Highest total degree among the terms; 0 for the zero element.
unsigned degree(const Element& x);

}  // namespace menv
