#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <stdexcept>

#include "menv/alternative.hpp"
#include "menv/combinatorics.hpp"
#include "menv/product.hpp"
#include "support.hpp"

using namespace menv;
using namespace menv::testing;

namespace {

AltElement alt(const AltMonomial& x, const GammaCoeff& c = GammaCoeff(1)) { return AltElement(x, c); }
AltElement t1(unsigned i) { return alt(AltMonomial::type1(i)); }
AltElement t2(unsigned r, unsigned n, unsigned p, unsigned s) { return alt(AltMonomial::type2(r, n, p, s)); }

// Random element of A(M) with every exponent <= max_exp.
AltElement random_alt(Rng& rng, unsigned max_terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms), ex(0, max_exp), coin(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AltElement out;
  for (unsigned n = terms(rng); n > 0; --n) {
    const AltMonomial m =
        coin(rng) == 0 ? AltMonomial::type1(ex(rng)) : AltMonomial::type2(ex(rng), ex(rng), ex(rng), ex(rng));
    out.add(m, g(coeff(rng), coin(rng) == 0 ? coeff(rng) : 0));
  }
  return out;
}

// Expansion of c * a^i * p(a) * d onto type-one monomials, p given by its coefficients.
AltElement times_d(unsigned i, const std::vector<Integer>& p) {
  AltElement out;
  for (std::size_t t = 0; t < p.size(); ++t) out.add(AltMonomial::type1(i + static_cast<unsigned>(t)), GammaCoeff(Rational(p[t])));
  return out;
}

// Coefficients of (a + w)^n.
std::vector<Integer> shifted(unsigned n, long w) {
  std::vector<Integer> out(n + 1);
  for (unsigned t = 0; t <= n; ++t) {
    Integer wp;
    mpz_pow_ui(wp.get_mpz_t(), Integer(w).get_mpz_t(), n - t);
    out[t] = binomial(n, t) * wp;
  }
  return out;
}

}  // namespace

TEST(AltMonomial, Basics) {
  EXPECT_TRUE(AltMonomial::type1(2).is_type1());
  EXPECT_FALSE(AltMonomial::type2(2, 0, 0, 0).is_type1());
  EXPECT_EQ(AltMonomial::unit(), AltMonomial::type2(0, 0, 0, 0));
  EXPECT_EQ(AltMonomial::type1(3).monomial(), Monomial(3, 0, 0, 1, 0));
  EXPECT_EQ(AltMonomial::type2(1, 2, 0, 1)[Gen::b], 2u);
  EXPECT_EQ(to_string(AltMonomial::type1(2)), "a^2 d");
  EXPECT_EQ(to_string(AltMonomial::unit()), "1");
  EXPECT_LT(AltMonomial::type2(0, 1, 0, 0), AltMonomial::type1(1));
}

TEST(ReduceModJ, Examples) {
  EXPECT_EQ(reduce_mod_J(mono(0, 1, 0, 1, 0)), AltElement());
  EXPECT_EQ(reduce_mod_J(mono(2, 0, 0, 1, 0)), t1(2));
  EXPECT_EQ(reduce_mod_J(mono(1, 1, 1, 0, 0) + mono(0, 0, 0, 2, 0)), t2(1, 1, 1, 0));
  EXPECT_EQ(reduce_mod_J(g(2) * mono(0, 0, 0, 2, 0)), AltElement());
  EXPECT_EQ(reduce_mod_J(mono(0, 0, 0, 1, 1)), AltElement());
  EXPECT_EQ(reduce_mod_J(mono(3, 0, 1, 1, 0)), AltElement());
  EXPECT_EQ(reduce_mod_J(g(0, 2) * mono(1, 2, 3, 0, 4)), g(0, 2) * t2(1, 2, 3, 4));
  EXPECT_EQ(reduce_mod_J(Element()), AltElement());
}

TEST(ReduceModJ, LiftIsASection) {
  Rng rng(23);
  for (int n = 0; n < 50; ++n) {
    const AltElement x = random_alt(rng, 4, 3);
    EXPECT_EQ(reduce_mod_J(lift(x)), x);
  }
}

TEST(AltMul, Examples) {
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned r = 0; r <= 3; ++r) EXPECT_EQ(alt_mul(t1(i), t1(r)), AltElement());
  EXPECT_EQ(alt_mul(t2(0, 0, 1, 0), t2(0, 1, 0, 0)), t2(0, 1, 1, 0) - g(2) * t1(0));
  EXPECT_EQ(alt_mul(t2(0, 0, 0, 1), t2(1, 0, 0, 0)), t2(1, 0, 0, 1) - g(0, 1) * t2(0, 0, 0, 1));
  EXPECT_EQ(alt_mul(t2(0, 1, 0, 0), t2(1, 1, 0, 0)), t2(1, 2, 0, 0) + t2(0, 2, 0, 0));
  EXPECT_EQ(alt_mul(t1(0), t2(1, 0, 0, 0)), t1(1) - t1(0));
  EXPECT_EQ(alt_mul(t2(2, 0, 0, 0), t1(1)), t1(3));
  EXPECT_EQ(alt_mul(t2(0, 1, 0, 0), t2(0, 0, 0, 1)), t2(0, 1, 0, 1));
}

TEST(AltMul, UnitAndZero) {
  Rng rng(29);
  for (int n = 0; n < 20; ++n) {
    const AltElement x = random_alt(rng, 4, 3);
    EXPECT_EQ(alt_mul(alt(AltMonomial::unit()), x), x);
    EXPECT_EQ(alt_mul(x, alt(AltMonomial::unit())), x);
    EXPECT_EQ(alt_mul(x, AltElement()), AltElement());
  }
}

TEST(AltMul, MatchesProductInEnvelopeModuloJ) {
  Rng rng(31);
  for (int n = 0; n < 40; ++n) {
    const AltElement x = random_alt(rng, 3, 2), y = random_alt(rng, 3, 2);
    EXPECT_EQ(alt_mul(x, y), reduce_mod_J(mul(lift(x), lift(y))));
  }
}

TEST(TCorrection, SmallValues) {
  EXPECT_EQ(t_correction(0, 0, 1, 0), AltElement());
  EXPECT_EQ(t_correction(0, 0, 0, 1), g(-2) * t1(0));
  EXPECT_EQ(t_correction(0, 0, 0, 0), AltElement());
  EXPECT_EQ(t_correction(3, 2, 0, 0), AltElement());
  EXPECT_THROW(t_correction(0, 0, 2, 0), std::invalid_argument);
  EXPECT_THROW(t_correction(0, 0, 0, 3), std::invalid_argument);
}

TEST(TCorrection, BThenNothingCase) {
  // (a-1)^{i+r} d - a^i (a+1)^r d
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned r = 0; r <= 3; ++r)
      EXPECT_EQ(t_correction(i, r, 1, 0), times_d(0, shifted(i + r, -1)) - times_d(i, shifted(r, 1)))
          << i << " " << r;
}

TEST(TCorrection, ReproducesEnvelopeProducts) {
  // a^i b^j c^k * a^r b^{1-j} c^{1-k} in U(M) mod J equals the first term plus T.
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned r = 0; r <= 2; ++r)
      for (unsigned j = 0; j <= 1; ++j)
        for (unsigned k = 0; k <= 1; ++k) {
          const Monomial x(i, j, k, 0, 0), z(r, 1 - j, 1 - k, 0, 0);
          const AltElement full = reduce_mod_J(mul_closed(x, z));
          AltElement first;
          const auto p = shifted(r, static_cast<long>(j + k));
          for (std::size_t t = 0; t < p.size(); ++t)
            first.add(AltMonomial::type2(i + static_cast<unsigned>(t), 1, 1, 0), GammaCoeff(Rational(p[t])));
          EXPECT_EQ(full - first, t_correction(i, r, j, k)) << i << r << j << k;
        }
}

TEST(AlternatorGenerators, Report) {
  const AlternatorReport report = alternator_generators_check();
  ASSERT_EQ(report.checks.size(), 4u);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.failures().empty());
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.matches) << c.name;
    EXPECT_TRUE(c.vanishes_mod_J) << c.name;
    EXPECT_FALSE(c.computed.is_zero()) << c.name;
  }
  EXPECT_EQ(report.checks[3].computed, g(0, 1) * mono(0, 0, 0, 1, 1));
}

TEST(AlternatorGenerators, FailuresAreListed) {
  AlternatorReport report;
  report.checks.push_back({"x", D, B, false, true});
  report.checks.push_back({"y", D, D, true, false});
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.failures().size(), 2u);
}

TEST(QuotientHomomorphism, Bounded) {
  EXPECT_TRUE(quotient_homomorphism_check(0));
  EXPECT_TRUE(quotient_homomorphism_check(3));
  EXPECT_EQ(alt_mul(reduce_mod_J(C), reduce_mod_J(B)), reduce_mod_J(mul(C, B)));
  EXPECT_EQ(alt_mul(reduce_mod_J(D), reduce_mod_J(D)), AltElement());
}

TEST(Alternativity, LeftAndRight) {
  Rng rng(37);
  for (int n = 0; n < 40; ++n) {
    const AltElement x = random_alt(rng, 3, 3), y = random_alt(rng, 3, 3);
    EXPECT_EQ(alt_associator(x, x, y), AltElement());
    EXPECT_EQ(alt_associator(y, x, x), AltElement());
  }
}

TEST(Alternativity, AssociatorIsSkewUnderPermutations) {
  Rng rng(41);
  for (int n = 0; n < 15; ++n) {
    std::array<AltElement, 3> v{random_alt(rng, 2, 2), random_alt(rng, 2, 2), random_alt(rng, 2, 2)};
    const AltElement base = alt_associator(v[0], v[1], v[2]);
    std::array<int, 3> perm{0, 1, 2};
    do {
      int inversions = 0;
      for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) inversions += perm[p] > perm[q];
      const AltElement permuted = alt_associator(v[perm[0]], v[perm[1]], v[perm[2]]);
      EXPECT_EQ(permuted, inversions % 2 == 0 ? base : -base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
