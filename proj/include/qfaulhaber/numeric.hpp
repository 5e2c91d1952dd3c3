#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfaulhaber/bigfloat.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

// High-precision numerics for the generating functions, the two q-zeta
// series, the Mellin quadrature that cross-checks them, and the Barnes F2
// limit diagnostic. Everything is a pure function of explicit parameters, so
// identical inputs give bit-identical outputs.

enum class Which { numbers, polynomials };

inline std::string to_string(Which w) { return w == Which::numbers ? "numbers" : "polynomials"; }

inline Which which_from_string(const std::string& s) {
    if (s == "numbers") return Which::numbers;
    if (s == "polynomials") return Which::polynomials;
    throw Error("unknown series kind: " + s);
}

// The polynomials-zeta exponent as printed (-n(s+2)/2) versus the one
// obtained by term-wise Mellin integration (+n(s-2)/2). Both are kept; the
// quadrature adjudicates between them at run time.
enum class ZetaVariant { paper, derived };

inline std::string to_string(ZetaVariant v) {
    return v == ZetaVariant::paper ? "paper" : "derived";
}

inline ZetaVariant zeta_variant_from_string(const std::string& s) {
    if (s == "paper") return ZetaVariant::paper;
    if (s == "derived") return ZetaVariant::derived;
    throw Error("unknown zeta variant: " + s);
}

struct NumericParams {
    Rational q = Rational(2);
    double tol = 1e-30;
    long max_terms = 100000;
    long precision = BigFloat::kDefaultPrecision;
};

namespace detail {

inline void validate(const NumericParams& p) {
    if (p.q <= 1) throw DomainError("series require q > 1");
    if (!(p.tol > 0.0) || !(p.tol < 1.0)) throw Error("tol must lie in (0, 1)");
    if (p.max_terms < 1) throw Error("max_terms must be >= 1");
}

}  // namespace detail

// Caches the ladder F*(t) = -t sum_j a_j exp(t lam_j) for one (k, q, kind),
// so repeated evaluations inside the quadrature pay only one exp per term.
// For t < 0 and q > 1 the lam_j grow like q^(j/2), making the tail decay
// super-exponentially.
class FStarSeries {
public:
    FStarSeries(long k, const Rational& q, Which which, long precision)
        : k_(k),
          which_(which),
          prec_(precision),
          q_(BigFloat::from_rational(q, precision)),
          sqrt_q_(q_.sqrt()),
          one_(BigFloat::of(1, precision)),
          q2_minus_1_(q_ * q_ - one_),
          q_minus_1_(q_ - one_) {
        if (q <= 1) throw DomainError("series require q > 1");
        if (k < 1) throw Error("FStarSeries requires k >= 1");
    }

    // F*(t) at t < 0, stopping after three consecutive terms fall below
    // tol * |partial sum| (guarding against an accidental zero term).
    BigFloat eval(const BigFloat& t, const BigFloat& tol, long max_terms) {
        if (t.sign() >= 0) throw DomainError("generating-function series requires t < 0");
        BigFloat total(prec_);
        long small = 0;
        long j = 0;
        while (small < 3) {
            if (static_cast<std::size_t>(j) >= a_.size()) extend();
            const BigFloat term = a_[j] * (t * lam_[j]).exp();
            total = total + term;
            if (j >= 1 && term.abs() < tol * total.abs())
                ++small;
            else
                small = 0;
            ++j;
            if (j > max_terms)
                throw TruncationNotConverged("generating-function series exceeded max_terms");
        }
        return -t * total;
    }

private:
    void extend() {
        const long j = static_cast<long>(a_.size());
        if (which_ == Which::numbers) {
            // a_j = q^(k-j) [j]_{q^2};  lam_j = [j]_q q^((k-j)/2).
            const BigFloat br2 = (q_.pow(2 * j) - one_) / q2_minus_1_;
            a_.push_back(q_.pow(k_ - j) * br2);
            lam_.push_back((q_.pow(j) - one_) / q_minus_1_ * sqrt_q_.pow(k_ - j));
        } else {
            // a_j = q^(-j) [j+k]_{q^2};  lam_j = [j+k]_q q^(-j/2).
            const BigFloat br2 = (q_.pow(2 * (j + k_)) - one_) / q2_minus_1_;
            a_.push_back(q_.pow(-j) * br2);
            lam_.push_back((q_.pow(j + k_) - one_) / q_minus_1_ * sqrt_q_.pow(-j));
        }
    }

    long k_;
    Which which_;
    long prec_;
    BigFloat q_, sqrt_q_, one_, q2_minus_1_, q_minus_1_;
    std::vector<BigFloat> a_, lam_;
};

inline BigFloat f_star_numeric(const BigFloat& t, long k, const NumericParams& p, Which which) {
    detail::validate(p);
    FStarSeries series(k, p.q, which, p.precision);
    return series.eval(t, BigFloat::of_double(p.tol, p.precision), p.max_terms);
}

namespace detail {

// 32-point Gauss-Legendre nodes and weights on [-1, 1] at the working
// precision: Newton iteration on the three-term Legendre recurrence from the
// Chebyshev initial guess.
inline std::pair<std::vector<BigFloat>, std::vector<BigFloat>> gauss_legendre_32(long prec) {
    constexpr long n = 32;
    const BigFloat one = BigFloat::of(1, prec);
    const BigFloat two = BigFloat::of(2, prec);
    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat thresh = BigFloat::two_power(-(prec - 10), prec);
    const auto legendre = [&](const BigFloat& x) {
        BigFloat p0 = one;
        BigFloat p1 = x;
        for (long j = 2; j <= n; ++j) {
            const BigFloat p2 =
                (BigFloat::of(2 * j - 1, prec) * x * p1 - BigFloat::of(j - 1, prec) * p0) /
                BigFloat::of(j, prec);
            p0 = p1;
            p1 = p2;
        }
        const BigFloat dp = BigFloat::of(n, prec) * (x * p1 - p0) / (x * x - one);
        return std::pair<BigFloat, BigFloat>(p1, dp);
    };
    std::vector<BigFloat> xs, ws;
    for (long i = 1; i <= n; ++i) {
        BigFloat x = (pi * BigFloat::of(4 * i - 1, prec) / BigFloat::of(4 * n + 2, prec)).cos();
        for (int iter = 0; iter < 60; ++iter) {
            const auto [p, dp] = legendre(x);
            const BigFloat dx = p / dp;
            x = x - dx;
            if (dx.abs() < thresh) break;
        }
        const auto [p, dp] = legendre(x);
        (void)p;
        xs.push_back(x);
        ws.push_back(two / ((one - x * x) * dp * dp));
    }
    return {xs, ws};
}

}  // namespace detail

// (1/Gamma(s)) int_0^inf t^(s-2) F*(-t) dt by composite 32-point
// Gauss-Legendre on [0, T]: T doubles until the integrand falls below
// 1e-40 of its sampled peak, then the interval count doubles until two
// successive estimates agree to 1e-12 relatively. Gamma(s) = (s-1)! exactly.
inline BigFloat mellin_quadrature(long s, long k, const NumericParams& p, Which which) {
    detail::validate(p);
    if (s < 3) throw DomainError("mellin_quadrature requires integer s >= 3");
    const long prec = p.precision;
    FStarSeries series(k, p.q, which, prec);
    const BigFloat tol = BigFloat::of_double(p.tol, prec);
    const auto g = [&](const BigFloat& t) {
        return t.pow(s - 2) * series.eval(-t, tol, p.max_terms);
    };

    BigFloat peak(prec);
    const BigFloat eighth = BigFloat::of(1, prec) / BigFloat::of(8, prec);
    for (long i = 1; i <= 64; ++i) {
        const BigFloat val = g(BigFloat::of(i, prec) * eighth).abs();
        if (val > peak) peak = val;
    }
    const BigFloat cutoff = BigFloat::from_string("1e-40", prec) * peak;
    BigFloat upper = BigFloat::of(1, prec);
    while (g(upper).abs() >= cutoff) upper = upper * BigFloat::of(2, prec);

    const auto [xs, ws] = detail::gauss_legendre_32(prec);
    Rational factorial(1);
    for (long i = 2; i < s; ++i) factorial *= i;
    const BigFloat gamma_s = BigFloat::from_rational(factorial, prec);
    const BigFloat rel_target = BigFloat::from_string("1e-12", prec);

    BigFloat prev(prec);
    bool have_prev = false;
    for (long intervals = 1; intervals <= (1L << 22); intervals *= 2) {
        const BigFloat h = upper / BigFloat::of(intervals, prec);
        const BigFloat half = h / BigFloat::of(2, prec);
        BigFloat total(prec);
        for (long m = 0; m < intervals; ++m) {
            const BigFloat mid = BigFloat::of(2 * m + 1, prec) * half;
            for (std::size_t i = 0; i < xs.size(); ++i)
                total = total + ws[i] * g(mid + half * xs[i]);
        }
        const BigFloat est = total * half / gamma_s;
        if (have_prev && (est - prev).abs() <= rel_target * est.abs()) return est;
        prev = est;
        have_prev = true;
    }
    throw QuadratureNotConverged();
}

// Truncated q-zeta series. numbers: sum_n [n]_{q^2} q^((k-n)(2-s)/2) / [n]_q^s
// (the n = 0 term is exactly 0). polynomials: sum_n [n+k]_{q^2} q^e / [n+k]_q^s
// with e the printed or the derived exponent per the variant.
inline BigFloat zeta_star_series(long s, long k, const NumericParams& p, Which which,
                                 ZetaVariant variant = ZetaVariant::derived) {
    detail::validate(p);
    if (s < 3) throw DomainError("zeta series requires integer s >= 3");
    if (k < 1) throw Error("zeta_star_series requires k >= 1");
    const long prec = p.precision;
    const BigFloat q = BigFloat::from_rational(p.q, prec);
    const BigFloat sqrt_q = q.sqrt();
    const BigFloat one = BigFloat::of(1, prec);
    const BigFloat q2_minus_1 = q * q - one;
    const BigFloat q_minus_1 = q - one;
    const BigFloat tol = BigFloat::of_double(p.tol, prec);

    BigFloat total(prec);
    long small = 0;
    long n = 0;
    while (small < 3) {
        BigFloat term(prec);
        if (which == Which::numbers) {
            if (n >= 1) {
                const BigFloat br2 = (q.pow(2 * n) - one) / q2_minus_1;
                const BigFloat brk = (q.pow(n) - one) / q_minus_1;
                term = br2 * sqrt_q.pow((k - n) * (2 - s)) / brk.pow(s);
            }
        } else {
            const BigFloat br2 = (q.pow(2 * (n + k)) - one) / q2_minus_1;
            const BigFloat brk = (q.pow(n + k) - one) / q_minus_1;
            const long e_twice = variant == ZetaVariant::paper ? -n * (s + 2) : n * (s - 2);
            term = br2 * sqrt_q.pow(e_twice) / brk.pow(s);
        }
        total = total + term;
        if (n >= 1 && term.abs() < tol * total.abs())
            ++small;
        else
            small = 0;
        ++n;
        if (n > p.max_terms) throw TruncationNotConverged("zeta series exceeded max_terms");
    }
    return total;
}

// F2(t; -1 | -1, -1) = t e^t / (1 - e^t)^2, the r = 2 Barnes specialization.
inline BigFloat barnes_f2(const BigFloat& t) {
    if (t.is_zero()) throw DomainError("barnes_f2 has a pole at t = 0");
    const BigFloat et = t.exp();
    const BigFloat one = BigFloat::of(1, t.precision());
    return t * et / ((one - et) * (one - et));
}

struct BarnesGap {
    Rational q;
    BigFloat f_star;
    BigFloat minus_f2;
    BigFloat gap;
};

// Records |F*_{k,q}(t) - (-F2(t))| for each q. The limit claim is only
// observed, never asserted: the gaps are data for the report.
inline std::vector<BarnesGap> barnes_limit_diagnostic(const BigFloat& t, long k,
                                                      const std::vector<Rational>& q_list,
                                                      const NumericParams& base) {
    if (t.sign() >= 0) throw DomainError("diagnostic requires t < 0");
    const BigFloat target = -barnes_f2(t);
    std::vector<BarnesGap> out;
    for (const Rational& q : q_list) {
        NumericParams p = base;
        p.q = q;
        const BigFloat fs = f_star_numeric(t, k, p, Which::numbers);
        out.push_back(BarnesGap{q, fs, target, (fs - target).abs()});
    }
    return out;
}

// zeta*_{k,q}(1-n) = -beta*_{n,k,q}/n, exactly, from the chosen closed form.
inline RegularizedValue zeta_special_value(long n, long k, Thm3Source source) {
    if (n < 1 || k < 1) throw Error("zeta_special_value requires n, k >= 1");
    const RegularizedValue beta =
        source == Thm3Source::paper ? beta_star_paper(n, k) : beta_star_reference(n, k);
    RegularizedValue out;
    out.status = beta.status;
    out.singular_terms = beta.singular_terms;
    if (beta.maybe_value) out.maybe_value = beta.value() * Rational(-1, n);
    return out;
}

}  // namespace qfaulhaber
