#include "qfaulhaber/rational_function.hpp"

#include "gtest/gtest.h"

namespace qfaulhaber {
namespace {

Poly v_pow(long e) { return Poly::monomial(Rational(1), e); }

TEST(RatFunc, CanonicalFormInvariants) {
    // (v^2 - 1)/(v - 1) reduces to v + 1 with denominator exactly 1.
    const RatFunc f(v_pow(2) - Poly(Rational(1)), v_pow(1) - Poly(Rational(1)));
    EXPECT_EQ(f.num(), v_pow(1) + Poly(Rational(1)));
    EXPECT_EQ(f.den(), Poly(Rational(1)));

    // A non-monic denominator is rescaled, moving the unit into the numerator.
    const RatFunc g(Poly(Rational(1)), Poly(Rational(2)) * v_pow(1));
    EXPECT_EQ(g.den(), v_pow(1));
    EXPECT_EQ(g.num(), Poly(Rational(1) / 2));

    // The zero function is exactly 0/1 no matter how it was produced.
    const RatFunc z(Poly(), v_pow(3) + Poly(Rational(4)));
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.den(), Poly(Rational(1)));

    EXPECT_THROW(RatFunc(v_pow(1), Poly()), ZeroDenominator);
}

TEST(RatFunc, CanonicalStringGrammar) {
    EXPECT_EQ(RatFunc().to_canonical_string(), "(0)");
    EXPECT_EQ(RatFunc(v_pow(2) + Poly(Rational(1))).to_canonical_string(), "(v^2 + 1)");
    const RatFunc f(v_pow(2), (v_pow(2) - Poly(Rational(1))) * (v_pow(2) - Poly(Rational(1))));
    EXPECT_EQ(f.to_canonical_string(), "(v^2) / (v^4 - 2*v^2 + 1)");
}

TEST(RatFunc, MonomialNegativeExponentsGoBelow) {
    const RatFunc f = RatFunc::monomial(Rational(3), -2);
    EXPECT_EQ(f.to_canonical_string(), "(3) / (v^2)");
    EXPECT_EQ(RatFunc::monomial(Rational(1), 4).to_canonical_string(), "(v^4)");
    EXPECT_EQ(f * RatFunc::monomial(Rational(1), 2), RatFunc(Rational(3)));
}

TEST(RatFunc, FieldArithmetic) {
    const RatFunc a = RatFunc::monomial(Rational(1), 2) - RatFunc(Rational(1));
    const RatFunc b = RatFunc::monomial(Rational(1), 1) + RatFunc(Rational(1));
    EXPECT_EQ(a / b, RatFunc::monomial(Rational(1), 1) - RatFunc(Rational(1)));
    EXPECT_EQ(a / a, RatFunc(Rational(1)));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * b / b, a);
    EXPECT_EQ((a / b) + (RatFunc(Rational(1)) / b), (a + RatFunc(Rational(1))) / b);
    EXPECT_TRUE(RatFunc(Rational(1)).is_one());
    EXPECT_THROW(a / RatFunc(), DivisionByZeroFunction);
}

TEST(RatFunc, PowIncludingNegative) {
    const RatFunc v = RatFunc::monomial(Rational(1), 1);
    EXPECT_EQ(v.pow(5), RatFunc::monomial(Rational(1), 5));
    EXPECT_EQ(v.pow(0), RatFunc(Rational(1)));
    EXPECT_EQ(v.pow(-3), RatFunc::monomial(Rational(1), -3));
    const RatFunc f = (v + RatFunc(Rational(1)));
    EXPECT_EQ(f.pow(2) * f, f.pow(3));
    EXPECT_EQ(f.pow(-2) * f.pow(2), RatFunc(Rational(1)));
}

TEST(RatFunc, EvalAtAndPoles) {
    const RatFunc f(v_pow(2) + Poly(Rational(1)), v_pow(1) - Poly(Rational(2)));
    EXPECT_EQ(f.eval_at(Rational(3)), Rational(10));
    EXPECT_EQ(f.eval_at(Rational(3) / 2), Rational(13, 4) / Rational(-1, 2));
    EXPECT_THROW(f.eval_at(Rational(2)), PoleAtPoint);
}

TEST(RatFunc, LimitAtOneDetectsGenuinePoles) {
    // (v^2 - 1)/(v - 1) cancels to v + 1, so the limit exists and is 2.
    const RatFunc removable(v_pow(2) - Poly(Rational(1)), v_pow(1) - Poly(Rational(1)));
    EXPECT_EQ(removable.limit_at_v1(), Rational(2));
    const RatFunc pole(Poly(Rational(1)), v_pow(1) - Poly(Rational(1)));
    EXPECT_THROW(pole.limit_at_v1(), PoleAtOne);
}

TEST(RatFunc, ScalarOperations) {
    const RatFunc v = RatFunc::monomial(Rational(1), 1);
    EXPECT_EQ(v * Rational(3), RatFunc::monomial(Rational(3), 1));
    EXPECT_EQ(Rational(3) * v, v * Rational(3));
    EXPECT_EQ((-v).to_canonical_string(), "(-v)");
}

}  // namespace
}  // namespace qfaulhaber
