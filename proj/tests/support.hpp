#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "menv/element.hpp"

namespace menv {

// Readable gtest failure messages.
template <class Key>
void PrintTo(const Combination<Key>& x, std::ostream* os) {
  *os << to_string(x);
}
inline void PrintTo(const GammaCoeff& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Monomial& x, std::ostream* os) { *os << to_string(x); }

}  // namespace menv

namespace menv::testing {

inline Element mono(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m) {
  return Element(Monomial(i, j, k, l, m));
}

inline GammaCoeff g(const Rational& c0, const Rational& c1 = 0, const Rational& c2 = 0) {
  return GammaCoeff(std::vector<Rational>{c0, c1, c2});
}

inline const Element A = generator(Gen::a), B = generator(Gen::b), C = generator(Gen::c), D = generator(Gen::d),
                     E = generator(Gen::e);

using Rng = std::mt19937_64;

inline Monomial random_monomial(Rng& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> pick(0, 4);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Monomial m;
  for (unsigned n = deg(rng); n > 0; --n) ++m.exps[pick(rng)];
  return m;
}

/// Up to max_terms terms of degree <= max_degree; coefficients are small
/// integers, sometimes with a gamma part.
inline Element random_element(Rng& rng, unsigned max_terms, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> coin(0, 2);
  Element out;
  for (unsigned n = terms(rng); n > 0; --n)
    out.add(random_monomial(rng, max_degree), g(coeff(rng), coin(rng) == 0 ? coeff(rng) : 0));
  return out;
}

inline Element random_nonzero_element(Rng& rng, unsigned max_terms, unsigned max_degree) {
  for (;;) {
    Element x = random_element(rng, max_terms, max_degree);
    if (!x.is_zero()) return x;
  }
}

}  // namespace menv::testing
