#include "qfaulhaber/q_objects.hpp"

#include "gtest/gtest.h"

namespace qfaulhaber {
namespace {

TEST(QExp, ConstructionAndValue) {
    EXPECT_EQ(QExp::from_integer(3).twice_value, 6);
    EXPECT_EQ(QExp::from_twice(5).twice_value, 5);
    EXPECT_EQ(QExp::from_rational(Rational(1) / 2).twice_value, 1);
    EXPECT_EQ(QExp::from_rational(Rational(-3) / 2).twice_value, -3);
    EXPECT_EQ(QExp::from_twice(4).value(), Rational(2));
    EXPECT_EQ(to_string(QExp::from_twice(4).value()), "2");  // canonical, not 4/2
    EXPECT_EQ(QExp::from_twice(3).value(), Rational(3) / 2);
    EXPECT_THROW(QExp::from_rational(Rational(1) / 3), Error);
    EXPECT_THROW(QExp::from_rational(Rational(5) / 4), Error);
}

TEST(QPower, HalfIntegerExponents) {
    EXPECT_EQ(q_power(QExp::from_integer(1)).to_canonical_string(), "(v^2)");
    EXPECT_EQ(q_power(QExp::from_twice(1)).to_canonical_string(), "(v)");
    EXPECT_EQ(q_power(QExp::from_twice(-3)).to_canonical_string(), "(1) / (v^3)");
    EXPECT_EQ(q_power(QExp::from_integer(0)), RatFunc(Rational(1)));
}

TEST(QBracket, SmallValues) {
    EXPECT_TRUE(q_bracket(QExp::from_integer(0)).is_zero());
    EXPECT_EQ(q_bracket(QExp::from_integer(1)), RatFunc(Rational(1)));
    EXPECT_EQ(q_bracket(QExp::from_integer(2)).to_canonical_string(), "(v^2 + 1)");
    EXPECT_EQ(q_bracket(QExp::from_integer(3)).to_canonical_string(), "(v^4 + v^2 + 1)");
    // [1/2]_q = (q^(1/2) - 1)/(q - 1) = 1/(v + 1)
    EXPECT_EQ(q_bracket(QExp::from_twice(1)).to_canonical_string(), "(1) / (v + 1)");
    // [-1]_q = -1/q
    EXPECT_EQ(q_bracket(QExp::from_integer(-1)).to_canonical_string(), "(-1) / (v^2)");
    EXPECT_THROW(q_bracket(QExp::from_integer(1), 0), Error);
}

TEST(QBracket, BaseTwoIsBracketOfQSquared) {
    // [k]_{q^2} = (q^(2k) - 1)/(q^2 - 1)
    EXPECT_EQ(q_bracket(QExp::from_integer(2), 2).to_canonical_string(), "(v^4 + 1)");
    for (long k = 0; k <= 6; ++k) {
        const RatFunc lhs = q_bracket(QExp::from_integer(k), 2);
        const RatFunc num = RatFunc::monomial(Rational(1), 4 * k) - RatFunc(Rational(1));
        const RatFunc den = RatFunc::monomial(Rational(1), 4) - RatFunc(Rational(1));
        if (k == 0)
            EXPECT_TRUE(lhs.is_zero());
        else
            EXPECT_EQ(lhs, num / den);
    }
}

TEST(QBracket, ClassicalLimit) {
    for (long k = -4; k <= 8; ++k)
        EXPECT_EQ(q_bracket(QExp::from_integer(k)).limit_at_v1(), Rational(k));
}

TEST(QBinomial, FrozenValueAndStructure) {
    EXPECT_EQ(q_binomial(4, 2).to_canonical_string(), "(v^8 + v^6 + 2*v^4 + v^2 + 1)");
    EXPECT_EQ(q_binomial(5, 0), RatFunc(Rational(1)));
    EXPECT_TRUE(q_binomial(3, 5).is_zero());
    EXPECT_TRUE(q_binomial(3, -1).is_zero());
    EXPECT_THROW(q_binomial(-1, 0), Error);
}

TEST(QBinomial, SymmetryAndClassicalLimit) {
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
            EXPECT_EQ(q_binomial(n, k).limit_at_v1(), binomial(n, k));
        }
}

TEST(QBinomial, PascalRecurrence) {
    // (n k)_q = (n-1 k-1)_q + q^k (n-1 k)_q
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k)
            EXPECT_EQ(q_binomial(n, k),
                      q_binomial(n - 1, k - 1) +
                          RatFunc::monomial(Rational(1), 2 * k) * q_binomial(n - 1, k));
}

TEST(QFactorial, FrozenValueAndRecurrence) {
    EXPECT_EQ(q_factorial(0), RatFunc(Rational(1)));
    EXPECT_EQ(q_factorial(3).to_canonical_string(), "(v^6 + 2*v^4 + 2*v^2 + 1)");
    for (long n = 1; n <= 7; ++n)
        EXPECT_EQ(q_factorial(n), q_factorial(n - 1) * q_bracket(QExp::from_integer(n)));
    EXPECT_THROW(q_factorial(-1), Error);
}

}  // namespace
}  // namespace qfaulhaber
