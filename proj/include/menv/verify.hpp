#pragma once

#include <optional>
#include <string>
#include <vector>

#include "menv/alternative.hpp"
#include "menv/malcev.hpp"
#include "menv/small_envelope.hpp"

namespace menv {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Default sweep bounds, each overridable per call.
struct SuiteBounds {
  unsigned oracle_max_exp = 2;   // every exponent of both factors
  unsigned nalt_max_degree = 3;  // total degree of x and y
  unsigned alt_max_degree = 4;   // quotient homomorphism sweep
  unsigned small_cap = 6;        // a-exponent cap in A_gamma

  /// Defaults, with MENV_MAX_EXP (if set to a nonnegative integer)
  /// replacing all four.
  static SuiteBounds from_environment();
  /// Sets all four bounds.
  void override_all(unsigned bound);
};

/// The three product engines agree on all monomial pairs with exponents
/// <= max_exp.
SuiteResult verify_engines(unsigned max_exp);
/// (s,x,y) = -(x,s,y) = (x,y,s) for generators s and monomials of degree
/// <= max_degree, identically in gamma.
SuiteResult verify_nalt(unsigned max_degree);
/// Malcev identity for the one-parameter family, plus a perturbed table
/// that must fail.
SuiteResult verify_malcev_suite();
/// Alternator generators, the quotient homomorphism up to max_degree and
/// alternativity of A(M_gamma) on random elements.
SuiteResult verify_alt(unsigned max_degree, unsigned random_pairs = 200);
/// Alternativity, embedding and ideal checks for A_gamma, plus a perturbed
/// table that must fail.
SuiteResult verify_small(unsigned cap);

/// Suite names: oracle, nalt, malcev, alt, small, all. Throws
/// std::invalid_argument for anything else.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteBounds& bounds);

/// A random element of A(M_gamma) with up to max_terms terms supported on
/// monomials with exponents <= max_exp and small integer coefficients,
/// some of them linear in gamma.
template <class Rng>
AltElement random_alt_element(Rng& rng, unsigned max_terms, unsigned max_exp);

}  // namespace menv

#include <random>

namespace menv {

template <class Rng>
AltElement random_alt_element(Rng& rng, unsigned max_terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms), exp(0, max_exp), coin(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AltElement out;
  const unsigned n = terms(rng);
  for (unsigned t = 0; t < n; ++t) {
    const AltMonomial m = coin(rng) == 0 ? AltMonomial::type1(exp(rng))
                                         : AltMonomial::type2(exp(rng), exp(rng), exp(rng), exp(rng));
    out.add(m, GammaCoeff(std::vector<Rational>{Rational(coeff(rng)), Rational(coin(rng) == 0 ? coeff(rng) : 0)}));
  }
  return out;
}

}  // namespace menv
