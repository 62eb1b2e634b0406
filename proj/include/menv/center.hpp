#pragma once

#include <optional>
#include <vector>

#include "menv/element.hpp"
#include "menv/gamma_mode.hpp"

namespace menv {

/// [x, s], computed with the adjoint operator rho_s.
Element ad_action(Gen s, const Element& x);

/// True iff [x, s] = 0 for every generator s. In symbolic mode the brackets
/// must vanish identically in gamma; otherwise gamma is set to mode.value().
bool is_central(const Element& x, const GammaMode& mode = GammaMode::symbolic());

/// d^l e^m for gamma0 = -l/m in lowest terms with l, m > 0; none for
/// gamma0 > 0, where the center is just the scalars.
/// Throws std::domain_error for gamma0 == 0.
std::optional<Monomial> center_generator(const Rational& gamma0);

struct CenterSearchOptions {
  /// Search only monomials without a. Faster, but takes for granted that
  /// central elements live in the subalgebra generated by b, c, d, e.
  bool a_free_only = false;
};

/// Basis of { n : [n, s] = 0 for all s } inside the span of monomials of
/// total degree <= max_degree, found by exact elimination.
///
/// Each rho_s is homogeneous for the grading deg(b) = (1,0,0),
/// deg(c) = (0,1,0), deg(d) = (1,1,0), deg(e) = (0,0,1), deg(a) = 0, so the
/// system splits into one block per grade. Basis vectors are scaled so that
/// their largest monomial has coefficient 1 and come out ordered by that
/// monomial. In symbolic mode a solution must have rational coefficients and
/// kill every power of gamma separately.
std::vector<Element> center_search(unsigned max_degree, const GammaMode& mode,
                                   const CenterSearchOptions& options = {});

}  // namespace menv
