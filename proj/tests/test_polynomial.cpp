#include "qfaulhaber/polynomial.hpp"

#include "gtest/gtest.h"

namespace qfaulhaber {
namespace {

Poly v_pow(long e) { return Poly::monomial(Rational(1), e); }

TEST(Poly, BasicShape) {
    const Poly zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), -1);
    EXPECT_EQ(zero.leading_coeff(), Rational(0));

    const Poly p = Poly::monomial(Rational(3), 2) + Poly(Rational(-1));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.leading_coeff(), Rational(3));
    EXPECT_EQ(p.coeff(2), Rational(3));
    EXPECT_EQ(p.coeff(1), Rational(0));
    EXPECT_EQ(p.coeff(0), Rational(-1));
    EXPECT_THROW(Poly::monomial(Rational(1), -1), Error);
}

TEST(Poly, ZeroCoefficientsNeverStored) {
    const Poly p = v_pow(3) - v_pow(3);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(Poly(Rational(0)).is_zero());
    EXPECT_TRUE(Poly::monomial(Rational(0), 5).is_zero());
    EXPECT_TRUE((v_pow(2) * Rational(0)).is_zero());
}

TEST(Poly, RingAxiomsOnSamples) {
    const Poly a = v_pow(3) + Poly(Rational(2)) * v_pow(1);
    const Poly b = v_pow(2) - Poly(Rational(5));
    const Poly c = v_pow(4) + v_pow(2) + Poly(Rational(1));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - a), Poly());
    EXPECT_EQ(-a + a, Poly());
}

TEST(Poly, ToStringGrammar) {
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ(Poly(Rational(5)).to_string(), "5");
    EXPECT_EQ(v_pow(1).to_string(), "v");
    EXPECT_EQ(v_pow(2).to_string(), "v^2");
    EXPECT_EQ((-v_pow(2)).to_string(), "-v^2");
    EXPECT_EQ((v_pow(4) - Poly(Rational(2)) * v_pow(2) + Poly(Rational(1))).to_string(),
              "v^4 - 2*v^2 + 1");
    EXPECT_EQ((Poly::monomial(Rational(1) / 2, 1) + Poly(Rational(-1) / 3)).to_string(),
              "1/2*v - 1/3");
    EXPECT_EQ((v_pow(2) + Poly(Rational(1))).to_string("k"), "k^2 + 1");
}

TEST(Poly, EvalMatchesDirectSubstitution) {
    const Poly p = v_pow(5) - Poly(Rational(3)) * v_pow(2) + Poly(Rational(7));
    for (long i = -4; i <= 4; ++i) {
        const Rational x(i, 1);
        EXPECT_EQ(p.eval(x), rational_pow(x, 5) - 3 * rational_pow(x, 2) + 7);
    }
    EXPECT_EQ(p.eval(Rational(1) / 2), Rational(1) / 32 - Rational(3) / 4 + 7);
}

TEST(Poly, DivmodInvariant) {
    const Poly a = v_pow(7) + Poly(Rational(3)) * v_pow(4) - v_pow(1) + Poly(Rational(2));
    const Poly b = Poly(Rational(2)) * v_pow(3) - v_pow(1);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(divmod(a, Poly()), ZeroDenominator);
}

TEST(Poly, GcdIsMonicCommonDivisor) {
    const Poly f = (v_pow(1) - Poly(Rational(1))) * (v_pow(1) + Poly(Rational(2)));
    const Poly g = (v_pow(1) - Poly(Rational(1))) * (v_pow(2) + Poly(Rational(1)));
    const Poly d = Poly::gcd(f * Rational(6), g * Rational(-4));
    EXPECT_EQ(d, v_pow(1) - Poly(Rational(1)));
    EXPECT_EQ(Poly::gcd(f, Poly()), f.monic());
    EXPECT_TRUE(Poly::gcd(Poly(), Poly()).is_zero());
    EXPECT_EQ(Poly::gcd(f, g).leading_coeff(), Rational(1));
}

TEST(Poly, CalculusRoundTrip) {
    const Poly p = v_pow(4) + Poly(Rational(2)) * v_pow(3) - v_pow(1);
    EXPECT_EQ(p.antiderivative().derivative(), p);
    EXPECT_EQ(p.derivative(),
              Poly(Rational(4)) * v_pow(3) + Poly(Rational(6)) * v_pow(2) - Poly(Rational(1)));
    EXPECT_EQ(p.antiderivative().coeff(0), Rational(0));
    EXPECT_TRUE(Poly(Rational(3)).derivative().is_zero());
}

TEST(Poly, MonicAndShift) {
    const Poly p = Poly(Rational(3)) * v_pow(2) + Poly(Rational(6));
    EXPECT_EQ(p.monic(), v_pow(2) + Poly(Rational(2)));
    EXPECT_EQ(p.shifted(2), Poly(Rational(3)) * v_pow(4) + Poly(Rational(6)) * v_pow(2));
    EXPECT_THROW(p.shifted(-1), Error);
}

}  // namespace
}  // namespace qfaulhaber
