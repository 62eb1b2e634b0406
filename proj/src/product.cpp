#include "menv/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "menv/combinatorics.hpp"

namespace menv {

namespace {

// (u)^zeta with 0^0 = 1.
Integer int_pow(long u, unsigned zeta) {
  Integer out;
  Integer base = u;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), zeta);
  return out;
}

}  // namespace

Element mul_closed(const Monomial& x, const Monomial& z) {
  const int i = static_cast<int>(x.exps[0]), j = static_cast<int>(x.exps[1]),
            k = static_cast<int>(x.exps[2]), l = static_cast<int>(x.exps[3]),
            m = static_cast<int>(x.exps[4]);
  const int r = static_cast<int>(z.exps[0]), n = static_cast<int>(z.exps[1]),
            p = static_cast<int>(z.exps[2]), q = static_cast<int>(z.exps[3]),
            s = static_cast<int>(z.exps[4]);

  Element out;
  // (a + omega)^r = sum_nu C(r,nu) omega^nu a^(r-nu), omega = w0 - m gamma.
  std::vector<Integer> binom_r(static_cast<std::size_t>(r) + 1);
  for (int nu = 0; nu <= r; ++nu) binom_r[nu] = binomial(r, nu);

  for (int alpha = 0; alpha <= std::min(j, k); ++alpha) {
    const Integer alpha_fact = factorial(alpha);
    for (int beta = 0; beta <= alpha; ++beta) {
      const Integer c_ab = alpha_fact * binomial(alpha, beta);
      for (int kappa = 0; kappa <= i; ++kappa) {
        for (int delta = 0; delta <= i - kappa; ++delta) {
          for (int eps = 0; eps <= i - kappa - delta; ++eps) {
            const Integer de_fact = factorial(delta + eps);
            for (int zeta = 0; zeta <= i - kappa - delta - eps; ++zeta) {
              const Integer st = stirling2(i - kappa - zeta, delta + eps);
              if (st == 0) continue;
              const Integer c_i = c_ab * int_pow(alpha - beta, zeta) * de_fact *
                                  multinomial(i, {static_cast<unsigned>(kappa), static_cast<unsigned>(zeta)}) * st;
              for (int eta = 0; eta <= j - alpha - eps; ++eta) {
                for (int theta = 0; theta <= j - alpha - eps - eta; ++theta) {
                  const Integer c_j =
                      multinomial(j, {static_cast<unsigned>(alpha), static_cast<unsigned>(eps),
                                      static_cast<unsigned>(eta), static_cast<unsigned>(theta)});
                  for (int lambda = 0; lambda <= k - alpha - delta; ++lambda) {
                    const Integer ff_b = falling_factorial(n, k - alpha - lambda);
                    if (ff_b == 0) continue;
                    const Integer ff_c = falling_factorial(p + lambda, j - alpha - eta);
                    if (ff_c == 0) continue;
                    for (int mu = 0; mu <= k - alpha - delta - lambda; ++mu) {
                      const Integer c_k =
                          multinomial(k, {static_cast<unsigned>(alpha), static_cast<unsigned>(delta),
                                          static_cast<unsigned>(lambda), static_cast<unsigned>(mu)});
                      const int sign_exp = i + j + k + alpha - beta - kappa - eps - eta - theta - lambda;
                      Integer coeff = c_i * c_j * c_k * ff_b * ff_c;
                      if (sign_exp % 2 != 0) coeff = -coeff;

                      const long w0 = j + k - l - 2 * alpha - beta - 2 * delta - 2 * eps - 2 * theta - 2 * mu;
                      GammaCoeff omega(std::vector<Rational>{Rational(w0), Rational(-m)});
                      GammaCoeff omega_pow(1);

                      Monomial result(0, static_cast<unsigned>(-k + n + alpha + eta + lambda),
                                      static_cast<unsigned>(-j + p + alpha + eta + lambda),
                                      static_cast<unsigned>(j + k + l + q - alpha - eta - lambda),
                                      static_cast<unsigned>(m + s));
                      for (int nu = 0; nu <= r; ++nu) {
                        result.exps[0] = static_cast<unsigned>(r + kappa - nu);
                        out.add(result, omega_pow * Rational(coeff * binom_r[nu]));
                        omega_pow *= omega;
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

Element mul(const Element& x, const Element& y, const MonomialProduct& product) {
  Element out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add(product(mx, my), cx * cy);
  return out;
}

Element mul(const Element& x, const Element& y) { return mul(x, y, mul_closed); }

Element commutator(const Element& x, const Element& y, const MonomialProduct& product) {
  return mul(x, y, product) - mul(y, x, product);
}

Element commutator(const Element& x, const Element& y) { return commutator(x, y, mul_closed); }

Element associator(const Element& x, const Element& y, const Element& z, const MonomialProduct& product) {
  return mul(mul(x, y, product), z, product) - mul(x, mul(y, z, product), product);
}

Element associator(const Element& x, const Element& y, const Element& z) {
  return associator(x, y, z, mul_closed);
}

Element gamma_eval(const Element& x, const Rational& gamma0) {
  if (gamma0 == 0) throw std::domain_error("gamma must be nonzero");
  Element out;
  for (const auto& [mono, coeff] : x.terms()) out.add(mono, GammaCoeff(coeff.evaluate(gamma0)));
  return out;
}

}  // namespace menv
