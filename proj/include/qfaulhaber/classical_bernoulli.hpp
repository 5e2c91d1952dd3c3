#pragma once

#include <mutex>
#include <vector>

#include "qfaulhaber/check_record.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/polynomial.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

// Polynomials in the abstract indeterminate k (or x) share the sparse
// representation of the v-polynomials; only the rendering variable differs.
using XPoly = Poly;

// B_n with the B_1 = -1/2 convention, via sum_{j=0..n} C(n+1, j) B_j = 0.
// The cache is append-only under a lock so concurrent readers are safe.
inline Rational bernoulli_number(long n) {
    if (n < 0) throw Error("bernoulli_number requires n >= 0");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<long>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
        cache.push_back(-acc / binomial(m + 1, m));
    }
    return cache[n];
}

// B_n(x) = sum_{j=0..n} C(n,j) B_j x^(n-j); monic of degree n.
inline XPoly bernoulli_poly(long n) {
    if (n < 0) throw Error("bernoulli_poly requires n >= 0");
    XPoly p;
    for (long j = 0; j <= n; ++j) {
        const Rational c = binomial(n, j) * bernoulli_number(j);
        if (c != 0) p = p + XPoly::monomial(c, n - j);
    }
    return p;
}

// S_n(k) = sum_{j=1}^{k-1} j^n by direct summation (empty for k <= 1).
inline Rational power_sum(long n, long k) {
    if (n < 1) throw Error("power_sum requires n >= 1");
    if (k < 0) throw Error("power_sum requires k >= 0");
    Rational acc(0);
    for (long j = 1; j <= k - 1; ++j) acc += rational_pow(Rational(j), n);
    return acc;
}

// S_n as a polynomial in k: (B_{n+1}(k) - B_{n+1})/(n+1).
inline XPoly power_sum_poly(long n) {
    if (n < 1) throw Error("power_sum_poly requires n >= 1");
    XPoly p = bernoulli_poly(n + 1) - XPoly(bernoulli_number(n + 1));
    return p * (Rational(1) / Rational(n + 1));
}

namespace detail {

inline CheckRecord classical_record(long n, const std::string& check, const Rational& lhs,
                                    const Rational& rhs) {
    CheckRecord rec;
    rec.suite = "faulhaber";
    rec.params = {{"check", check}, {"n", std::to_string(n)}};
    rec.lhs = to_string(lhs);
    rec.rhs = to_string(rhs);
    rec.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    rec.residual = to_string(lhs - rhs);
    return rec;
}

inline CheckRecord classical_record(long n, const std::string& check, const XPoly& lhs,
                                    const XPoly& rhs) {
    CheckRecord rec;
    rec.suite = "faulhaber";
    rec.params = {{"check", check}, {"n", std::to_string(n)}};
    rec.lhs = lhs.to_string("k");
    rec.rhs = rhs.to_string("k");
    rec.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    rec.residual = (lhs - rhs).to_string("k");
    return rec;
}

}  // namespace detail

// The five exact sub-checks of the paper's classical display: conjectures
// I-III (leading coefficient 1/(n+1), zero constant term, k^n coefficient
// -1/2), the derivative's two leading terms, and the integral identity
// int_0^k B_n(x) dx = S_n(k) as polynomials.
inline std::vector<CheckRecord> faulhaber_check(long n) {
    if (n < 1) throw Error("faulhaber_check requires n >= 1");
    std::vector<CheckRecord> records;
    const XPoly s = power_sum_poly(n);

    records.push_back(detail::classical_record(
        n, "leading-coefficient", s.degree() == n + 1 ? s.leading_coeff() : Rational(0),
        Rational(1, n + 1)));
    records.push_back(detail::classical_record(n, "constant-term", s.coeff(0), Rational(0)));
    records.push_back(detail::classical_record(n, "kn-coefficient", s.coeff(n), Rational(-1, 2)));

    // d/dk S_n(k) = k^n - (n/2) k^(n-1) + ...
    const XPoly d = s.derivative();
    XPoly d_leading = XPoly::monomial(d.coeff(n), n);
    if (n >= 1) d_leading = d_leading + XPoly::monomial(d.coeff(n - 1), n - 1);
    XPoly expected = XPoly::monomial(Rational(1), n) + XPoly::monomial(Rational(-n) / 2, n - 1);
    records.push_back(detail::classical_record(n, "derivative-leading", d_leading, expected));

    records.push_back(detail::classical_record(n, "integral-identity",
                                               bernoulli_poly(n).antiderivative(), s));
    return records;
}

// Solves "monic degree-n P with int_0^k P = S_n(k) for k = 1..n+1" exactly
// and returns the unique solution; throws if the system fails to pin one
// (it cannot, but the witness must demonstrate that rather than assume it).
inline XPoly uniqueness_witness(long n) {
    if (n < 1) throw Error("uniqueness_witness requires n >= 1");
    // Unknowns c_0..c_{n-1} with P(x) = x^n + sum c_i x^i.
    // Row k:  sum_i c_i k^{i+1}/(i+1) = S_n(k) - k^{n+1}/(n+1).
    const long rows = n + 1;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1, Rational(0)));
    for (long r = 0; r < rows; ++r) {
        const long k = r + 1;
        for (long i = 0; i < n; ++i)
            m[r][i] = rational_pow(Rational(k), i + 1) / Rational(i + 1);
        m[r][n] = power_sum(n, k) - rational_pow(Rational(k), n + 1) / Rational(n + 1);
    }
    // Gaussian elimination with exact pivots.
    long rank = 0;
    for (long col = 0; col < n && rank < rows; ++col) {
        long pivot = -1;
        for (long r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("uniqueness witness: singular system");
        std::swap(m[rank], m[pivot]);
        const Rational inv = Rational(1) / m[rank][col];
        for (long c = col; c <= n; ++c) m[rank][c] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (long c = col; c <= n; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    if (rank != n) throw Error("uniqueness witness: underdetermined system");
    // The leftover rows must be consistent (0 = 0) for a unique solution.
    for (long r = rank; r < rows; ++r)
        if (m[r][n] != 0) throw Error("uniqueness witness: inconsistent system");
    XPoly p = XPoly::monomial(Rational(1), n);
    for (long i = 0; i < n; ++i)
        if (m[i][n] != 0) p = p + XPoly::monomial(m[i][n], i);
    return p;
}

}  // namespace qfaulhaber
