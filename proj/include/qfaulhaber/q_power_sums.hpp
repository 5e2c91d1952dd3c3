#pragma once

#include <string>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/q_objects.hpp"
#include "qfaulhaber/rational_function.hpp"

namespace qfaulhaber {

// Direct finite-sum evaluators. These are deliberately naive: each one walks
// the printed summation term by term so it can serve as the brute-force
// oracle against every closed form. Empty sums return 0.

// S_{m,n}(q) = sum_{k=1..n} [k]_{q^2} [k]_q^(m-1) q^((n-k)(m+1)/2).
inline RatFunc schlosser_sum(long m, long n) {
    if (m < 1) throw Error("schlosser_sum requires m >= 1");
    if (n < 0) throw Error("schlosser_sum requires n >= 0");
    RatFunc s;
    for (long k = 1; k <= n; ++k) {
        RatFunc term = q_bracket(QExp::from_integer(k), 2);
        term = term * q_bracket(QExp::from_integer(k)).pow(m - 1);
        term = term * RatFunc::monomial(Rational(1), (n - k) * (m + 1));
        s = s + term;
    }
    return s;
}

// sum_{k=1..n} q^(2n-2k) (1-q^k)^2 (1-q^2k) / ((1-q)^2 (1-q^2)), the cube-sum
// side of the identity whose right side is the squared Gaussian binomial.
inline RatFunc warnaar_lhs(long n) {
    if (n < 0) throw Error("warnaar_lhs requires n >= 0");
    RatFunc s;
    for (long k = 1; k <= n; ++k) {
        RatFunc term = RatFunc::monomial(Rational(1), 4 * (n - k));
        term = term * q_bracket(QExp::from_integer(k)).pow(2);
        term = term * q_bracket(QExp::from_integer(k), 2);
        s = s + term;
    }
    return s;
}

// sum_{k=1..n} q^(k-1) [k]_q^2 ((1-q^(k-1))/(1-q^2) + (1-q^(k+1))/(1-q^2)),
// the other printed cube-sum with the same right side.
inline RatFunc garrett_hummel_lhs(long n) {
    if (n < 0) throw Error("garrett_hummel_lhs requires n >= 0");
    const RatFunc one(Rational(1));
    const RatFunc den = one - RatFunc::monomial(Rational(1), 4);
    RatFunc s;
    for (long k = 1; k <= n; ++k) {
        const RatFunc low = (one - RatFunc::monomial(Rational(1), 2 * (k - 1))) / den;
        const RatFunc high = (one - RatFunc::monomial(Rational(1), 2 * (k + 1))) / den;
        RatFunc term = RatFunc::monomial(Rational(1), 2 * (k - 1));
        term = term * q_bracket(QExp::from_integer(k)).pow(2);
        term = term * (low + high);
        s = s + term;
    }
    return s;
}

enum class KimVariant { linear, square };

inline std::string to_string(KimVariant v) {
    return v == KimVariant::linear ? "linear" : "square";
}

inline KimVariant kim_variant_from_string(const std::string& s) {
    if (s == "linear") return KimVariant::linear;
    if (s == "square") return KimVariant::square;
    throw Error("unknown kim variant: " + s);
}

// linear: sum_{k=0..n-1} q^k [k]_q;  square: sum_{k=0..n-1} q^(k+1) [k]_q^2.
inline RatFunc kim_sum(long n, KimVariant variant) {
    if (n < 1) throw Error("kim_sum requires n >= 1");
    RatFunc s;
    for (long k = 0; k < n; ++k) {
        const RatFunc bracket = q_bracket(QExp::from_integer(k));
        RatFunc term;
        if (variant == KimVariant::linear)
            term = RatFunc::monomial(Rational(1), 2 * k) * bracket;
        else
            term = RatFunc::monomial(Rational(1), 2 * (k + 1)) * bracket.pow(2);
        s = s + term;
    }
    return s;
}

// The general formula's summation side, sum_{j=0..k-1} [j]_{q^2} [j]_q^(n-1)
// q^((n+1)(k-j)/2). Its exponent is a genuine half-integer when n is even;
// everything stays polynomial in v.
inline RatFunc thm3_lhs(long n, long k) {
    if (n < 1) throw Error("thm3_lhs requires n >= 1");
    if (k < 0) throw Error("thm3_lhs requires k >= 0");
    RatFunc s;
    for (long j = 1; j < k; ++j) {
        RatFunc term = q_bracket(QExp::from_integer(j), 2);
        term = term * q_bracket(QExp::from_integer(j)).pow(n - 1);
        term = term * RatFunc::monomial(Rational(1), (n + 1) * (k - j));
        s = s + term;
    }
    return s;
}

}  // namespace qfaulhaber
