#pragma once

#include <gmpxx.h>

#include <string>

#include "qfaulhaber/errors.hpp"

namespace qfaulhaber {

// Exact arbitrary-precision fraction; GMP keeps the canonical form
// (denominator > 0, gcd(|num|, den) = 1, zero is 0/1) after every operation.
using Rational = mpq_class;

// Renders "a" for integers and "a/b" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b" with optional leading '-'.  Decimal input is rejected:
// spot-check values must stay exact.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (slash != std::string::npos) throw Error("malformed rational: " + text);
            slash = i;
            continue;
        }
        if (c == '-' && (i == 0 || i == slash + 1)) continue;
        if (c < '0' || c > '9') throw Error("malformed rational (exact a/b required): " + text);
    }
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num.empty() || num == "-" || den.empty() || den == "-")
        throw Error("malformed rational: " + text);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw Error("malformed rational: " + text);
    if (r.get_den() == 0) throw ZeroDenominator("rational literal with zero denominator: " + text);
    r.canonicalize();
    return r;
}

// r^e for integer e (e < 0 requires r != 0).
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw ZeroDenominator("0 raised to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(r.get_den(), r.get_num()) : r;
    if (e < 0) base.canonicalize();
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n != 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    acc.canonicalize();
    return acc;
}

// Exact binomial coefficient as a Rational (0 outside 0 <= k <= n).
inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace qfaulhaber
