#pragma once

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/rational.hpp"
#include "qfaulhaber/rational_function.hpp"

namespace qfaulhaber {

// A half-integer exponent of q, stored as 2e so that q^e = v^(2e) is always
// a (Laurent) monomial in the internal variable v = q^(1/2).
struct QExp {
    long twice_value = 0;

    static QExp from_integer(long e) { return QExp{2 * e}; }
    static QExp from_twice(long twice) { return QExp{twice}; }

    // Accepts integers and half-integers; anything with denominator > 2 is
    // malformed input for this algebra.
    static QExp from_rational(const Rational& e) {
        const Rational doubled = e * 2;
        if (doubled.get_den() != 1)
            throw Error("q-exponent denominator exceeds 2: " + qfaulhaber::to_string(e));
        return QExp{static_cast<long>(doubled.get_num().get_si())};
    }

    Rational value() const {
        Rational r(twice_value, 2);
        r.canonicalize();
        return r;
    }
};

// q^e as a canonical RatFunc: v^(2e), with the power in the denominator when
// e < 0.
inline RatFunc q_power(QExp e) { return RatFunc::monomial(Rational(1), e.twice_value); }

// [e]_{q^base} = (q^(base*e) - 1)/(q^base - 1), defined for every half-integer
// e including negatives; base >= 1 (base 2 gives the [k]_{q^2} of the direct
// sums).
inline RatFunc q_bracket(QExp e, long base = 1) {
    if (base < 1) throw Error("q_bracket base must be >= 1");
    if (e.twice_value == 0) return RatFunc();
    const RatFunc one(Rational(1));
    const RatFunc num = RatFunc::monomial(Rational(1), base * e.twice_value) - one;
    const RatFunc den = RatFunc::monomial(Rational(1), 2 * base) - one;
    return num / den;
}

// Gaussian binomial via the product formula; 0 outside 0 <= k <= n.
inline RatFunc q_binomial(long n, long k) {
    if (n < 0) throw Error("q_binomial requires n >= 0");
    if (k < 0 || k > n) return RatFunc();
    RatFunc r(Rational(1));
    const RatFunc one(Rational(1));
    for (long j = 1; j <= k; ++j) {
        const RatFunc num = one - RatFunc::monomial(Rational(1), 2 * (n + 1 - j));
        const RatFunc den = one - RatFunc::monomial(Rational(1), 2 * j);
        r = r * (num / den);
    }
    return r;
}

// [n]_q! = prod_{j=1..n} [j]_q; the empty product is 1.
inline RatFunc q_factorial(long n) {
    if (n < 0) throw Error("q_factorial requires n >= 0");
    RatFunc r(Rational(1));
    for (long j = 1; j <= n; ++j) r = r * q_bracket(QExp::from_integer(j));
    return r;
}

}  // namespace qfaulhaber
