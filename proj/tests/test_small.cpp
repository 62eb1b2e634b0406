#include <gtest/gtest.h>

#include <stdexcept>

#include "menv/small_envelope.hpp"
#include "support.hpp"

using namespace menv;
using namespace menv::testing;

namespace {

SmallElement s(const SmallBasis& x, const GammaCoeff& c = GammaCoeff(1)) { return SmallElement(x, c); }
SmallBasis ap(unsigned r) { return SmallBasis::power(r); }
SmallBasis let(Gen g) { return SmallBasis::letter(g); }

SmallElement commutator_small(const SmallBasis& x, const SmallBasis& y) { return small_mul(x, y) - small_mul(y, x); }

}  // namespace

TEST(SmallBasis, Construction) {
  EXPECT_THROW(SmallBasis::power(0), std::invalid_argument);
  EXPECT_THROW(SmallBasis::letter(Gen::a), std::invalid_argument);
  EXPECT_TRUE(ap(3).is_power());
  EXPECT_EQ(ap(3).exponent(), 3u);
  EXPECT_FALSE(let(Gen::d).is_power());
  EXPECT_EQ(let(Gen::d).gen(), Gen::d);
  EXPECT_EQ(to_string(ap(1)), "a");
  EXPECT_EQ(to_string(ap(2)), "a^2");
  EXPECT_EQ(to_string(let(Gen::e)), "e");
}

TEST(SmallMul, Table) {
  EXPECT_EQ(small_mul(ap(2), ap(3)), s(ap(5)));
  EXPECT_EQ(small_mul(ap(2), let(Gen::d)), s(let(Gen::d)));
  EXPECT_EQ(small_mul(let(Gen::b), ap(4)), s(let(Gen::b)));
  EXPECT_EQ(small_mul(let(Gen::b), let(Gen::c)), s(let(Gen::d)));
  EXPECT_EQ(small_mul(let(Gen::c), ap(1)), s(let(Gen::c)));
  EXPECT_EQ(small_mul(let(Gen::c), let(Gen::b)), s(let(Gen::d), -1));
  EXPECT_EQ(small_mul(let(Gen::e), ap(2)), s(let(Gen::e), g(0, 0, 1)));
  EXPECT_EQ(small_mul(let(Gen::e), ap(3)), s(let(Gen::e), g(0, 0, 0) + GammaCoeff::monomial(3, -1)));
  EXPECT_EQ(small_mul(let(Gen::d), let(Gen::b)), SmallElement());
  EXPECT_EQ(small_mul(ap(1), let(Gen::e)), SmallElement());
  EXPECT_EQ(small_mul(let(Gen::d), ap(1)), SmallElement());
  EXPECT_EQ(small_mul(ap(1), let(Gen::b)), SmallElement());
}

TEST(SmallMul, BilinearExtension) {
  const SmallElement x = s(ap(1)) + s(let(Gen::b), 2);
  const SmallElement y = s(ap(2)) - s(let(Gen::c));
  // a a^2 - a c + 2 b a^2 - 2 b c
  EXPECT_EQ(small_mul(x, y), s(ap(3)) + s(let(Gen::b), 2) - s(let(Gen::d), 2));
}

TEST(SmallEnvelope, Alternative) {
  EXPECT_TRUE(small_alternativity_check(1));
  EXPECT_TRUE(small_alternativity_check(6));
  const SmallElement e = s(let(Gen::e)), a = s(ap(1));
  EXPECT_EQ(small_associator(e, a, e), SmallElement());
  EXPECT_EQ(small_associator(a, e, e), SmallElement());
  EXPECT_EQ(small_associator(e, e, a), SmallElement());
}

TEST(SmallEnvelope, NotAssociative) {
  // (c, b, a) = (c b) a - c (b a) = -d a - c b = d
  const SmallElement a = s(ap(1)), b = s(let(Gen::b)), c = s(let(Gen::c));
  EXPECT_EQ(small_associator(c, b, a), s(let(Gen::d)));
}

TEST(SmallEnvelope, CommutatorsReproduceTheBracket) {
  EXPECT_TRUE(embedding_check());
  EXPECT_EQ(commutator_small(ap(1), let(Gen::e)), s(let(Gen::e), g(0, 1)));
  EXPECT_EQ(commutator_small(let(Gen::b), let(Gen::c)), s(let(Gen::d), 2));
  EXPECT_EQ(commutator_small(let(Gen::d), let(Gen::e)), SmallElement());
  EXPECT_EQ(commutator_small(ap(1), let(Gen::b)), s(let(Gen::b), -1));
  EXPECT_EQ(commutator_small(ap(1), let(Gen::d)), s(let(Gen::d)));
}

TEST(SmallEnvelope, IdealOfPowerDifferences) { EXPECT_TRUE(small_ideal_check(6)); }

TEST(SmallEnvelope, PerturbedTableIsRejected) {
  const SmallTable perturbed = [](const SmallBasis& x, const SmallBasis& y) {
    if (!x.is_power() && !y.is_power() && x.gen() == Gen::b && y.gen() == Gen::c) return s(let(Gen::e));
    return small_mul(x, y);
  };
  EXPECT_FALSE(small_alternativity_check(3, perturbed));
  EXPECT_FALSE(embedding_check(perturbed));
}
