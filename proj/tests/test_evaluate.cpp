#include <gtest/gtest.h>

#include <stdexcept>

#include "expr_gen.hpp"
#include "menv/evaluate.hpp"
#include "support.hpp"

using namespace menv;
using namespace menv::testing;

namespace {

constexpr Engine kEngines[] = {Engine::closed, Engine::operator_calculus, Engine::oracle};

Element eval(std::string_view text, Engine engine = Engine::closed, const GammaMode& mode = GammaMode::symbolic()) {
  return evaluate(parse_expr(text), engine, mode);
}

AltElement alt2(unsigned r, unsigned n, unsigned p, unsigned s) { return AltElement(AltMonomial::type2(r, n, p, s)); }

}  // namespace

TEST(Engines, Names) {
  EXPECT_EQ(parse_engine("closed"), Engine::closed);
  EXPECT_EQ(parse_engine("operator"), Engine::operator_calculus);
  EXPECT_EQ(parse_engine("oracle"), Engine::oracle);
  EXPECT_THROW(parse_engine("fast"), std::invalid_argument);
  for (Engine e : kEngines) EXPECT_EQ(parse_engine(to_string(e)), e);
}

TEST(Evaluate, ExamplesOnEveryEngine) {
  for (Engine e : kEngines) {
    EXPECT_EQ(eval("assoc(c, (a*b), (a*b))", e), -mono(0, 1, 0, 1, 0)) << to_string(e);
    EXPECT_EQ(eval("comm(a b c, a)", e), g(2) * mono(1, 1, 1, 0, 0) - g(3) * mono(1, 0, 0, 1, 0)) << to_string(e);
    EXPECT_EQ(eval("(a*(b*c)) - a b c", e), Element()) << to_string(e);
    EXPECT_EQ(eval("c*b", e), mono(0, 1, 1, 0, 0) - g(2) * D);
    EXPECT_EQ(eval("ad(a, d e)", e), g(-1, -1) * mono(0, 0, 0, 1, 1));
    EXPECT_EQ(eval("ad(b, c^2)", e), g(-4) * mono(0, 0, 1, 1, 0));
    EXPECT_EQ(eval("assoc(a c, b e, a) + assoc(b e, a c, a)", e), g(0, 1) * mono(0, 0, 0, 1, 1));
  }
}

TEST(Evaluate, Scalars) {
  EXPECT_EQ(eval("g e", Engine::closed, GammaMode::instantiated(3)), g(3) * E);
  EXPECT_EQ(eval("g^2 - 1/2"), g(Rational(-1, 2), 0, 1) * scalar(1));
  EXPECT_EQ(eval("2 (a + b)"), g(2) * (A + B));
  EXPECT_EQ(eval("-(a - b)"), B - A);
  EXPECT_EQ(eval("1/3 g a * e", Engine::closed, GammaMode::instantiated(Rational(3, 2))),
            g(Rational(1, 2)) * mono(1, 0, 0, 0, 1));
}

TEST(Evaluate, InstantiatedModeSpecializes) {
  EXPECT_EQ(eval("e*a", Engine::oracle, GammaMode::instantiated(2)), mono(1, 0, 0, 0, 1) - g(2) * E);
  EXPECT_EQ(eval("e*a", Engine::oracle), mono(1, 0, 0, 0, 1) - g(0, 1) * E);
}

TEST(Evaluate, EvaluatorReuse) {
  for (Engine e : kEngines) {
    Evaluator ev(e);
    EXPECT_EQ(ev.engine(), e);
    EXPECT_EQ(ev.multiply(Monomial::of(Gen::d), Monomial::of(Gen::a)), mono(1, 0, 0, 1, 0) - D);
    EXPECT_EQ(ev.evaluate(parse_expr("b*(a b)")), mono(1, 2, 0, 0, 0) + mono(0, 2, 0, 0, 0));
    EXPECT_EQ(ev.evaluate(parse_expr("b*(a b)")), mono(1, 2, 0, 0, 0) + mono(0, 2, 0, 0, 0));
  }
}

TEST(Evaluate, EnginesAgreeOnRandomTrees) {
  ExprGenerator generate(2024);
  Evaluator closed(Engine::closed), op(Engine::operator_calculus), oracle(Engine::oracle);
  for (int n = 0; n < 150; ++n) {
    const Expr x = generate(3);
    const Element expected = closed.evaluate(x);
    ASSERT_EQ(op.evaluate(x), expected) << to_string(x);
    ASSERT_EQ(oracle.evaluate(x), expected) << to_string(x);
  }
}

TEST(Evaluate, PrintedElementsParseBack) {
  Rng rng(3);
  for (int n = 0; n < 100; ++n) {
    const Element x = random_element(rng, 5, 4);
    EXPECT_EQ(eval(to_string(x)), x) << to_string(x);
  }
}

TEST(EvaluateAlt, Examples) {
  EXPECT_EQ(evaluate_alt(parse_expr("c*b")), alt2(0, 1, 1, 0) - g(2) * AltElement(AltMonomial::type1(0)));
  EXPECT_EQ(evaluate_alt(parse_expr("assoc(c, (a*b), (a*b))")), AltElement());
  EXPECT_EQ(evaluate_alt(parse_expr("b d + a^2 d")), AltElement(AltMonomial::type1(2)));
  EXPECT_EQ(evaluate_alt(parse_expr("e*a"), GammaMode::instantiated(2)), alt2(1, 0, 0, 1) - g(2) * alt2(0, 0, 0, 1));
  EXPECT_EQ(evaluate_alt(parse_expr("assoc(a c, b e, a) + assoc(b e, a c, a)")), AltElement());
}

TEST(EvaluateAlt, MatchesEnvelopeModuloJ) {
  ExprGenerator generate(77, 1);
  for (int n = 0; n < 80; ++n) {
    const Expr x = generate(3);
    EXPECT_EQ(evaluate_alt(x), reduce_mod_J(evaluate(x))) << to_string(x);
  }
}

TEST(GammaEval, AltElements) {
  const AltElement x = g(1, 2) * alt2(1, 0, 0, 0) + g(0, 0, 1) * alt2(0, 0, 0, 1);
  EXPECT_EQ(gamma_eval(x, 2), g(5) * alt2(1, 0, 0, 0) + g(4) * alt2(0, 0, 0, 1));
  // The a coefficient 1 + 2 gamma vanishes at -1/2.
  EXPECT_EQ(gamma_eval(x, Rational(-1, 2)), g(Rational(1, 4)) * alt2(0, 0, 0, 1));
  EXPECT_THROW(gamma_eval(x, 0), std::domain_error);
}

TEST(GammaMode, ZeroIsRejected) {
  EXPECT_THROW(GammaMode::instantiated(0), std::domain_error);
  EXPECT_THROW(eval("a", Engine::closed, GammaMode::parse("0")), std::domain_error);
}
