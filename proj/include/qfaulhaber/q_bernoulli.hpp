#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qfaulhaber/bivariate.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/q_objects.hpp"
#include "qfaulhaber/q_power_sums.hpp"
#include "qfaulhaber/rational_function.hpp"

namespace qfaulhaber {

// Closed forms for the q-Bernoulli numbers/polynomials: the two printed
// theorems, an independent reference oracle built by geometric continuation
// of the generating functions, the quotient form of the general formula, and
// the classical Warnaar/Schlosser/Kim right-hand sides.
//
// Both printed theorems contain denominators 1 - q^(m - (n-1)/2 - 2) and
// 1 - q^(m - (n-1)/2) whose exponents vanish for odd n at two values of m.
// Policy: deform the single shared source (n-1)/2 -> (n-1)/2 + eps, realized
// as q^eps |-> z in every exponent containing (n-1)/2, reduce exactly in
// (v, z), then substitute z = 1. The m = 0 term is dropped outright: its
// numerator factor m annihilates it before any division happens.

enum class RegStatus { regular, regularized, singular };

inline std::string to_string(RegStatus s) {
    switch (s) {
        case RegStatus::regular: return "regular";
        case RegStatus::regularized: return "regularized";
        default: return "singular";
    }
}

// A closed-form evaluation together with how it had to be obtained. The
// value is absent exactly when the z-deformation failed to cancel the pole
// (status singular); the accessor refuses to hand out a non-existent value.
struct RegularizedValue {
    std::optional<RatFunc> maybe_value;
    RegStatus status = RegStatus::regular;
    std::vector<long> singular_terms;

    const RatFunc& value() const {
        if (!maybe_value) throw SingularUnresolved();
        return *maybe_value;
    }
};

inline std::string singular_terms_to_string(const std::vector<long>& terms) {
    std::string s = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(terms[i]);
    }
    return s + "]";
}

namespace detail {

// The two evaluation contexts share every formula below. The plain context
// is the deformed one already evaluated at z = 1 term by term, which is legal
// exactly when no denominator exponent vanishes; the deformed context keeps
// z symbolic and cancels before substituting.
struct PlainCtx {
    using F = RatFunc;
    static F mono(const Rational& c, long v_exp, long /*z_exp*/) {
        return RatFunc::monomial(c, v_exp);
    }
    static RatFunc reduce(const F& f) { return f; }
};

struct DeformedCtx {
    using F = RatFunc2;
    static F mono(const Rational& c, long v_exp, long z_exp) {
        return RatFunc2::monomial(c, v_exp, z_exp);
    }
    static RatFunc reduce(const F& f) { return f.subst_z1(); }
};

template <class Ctx>
typename Ctx::F ctx_pow(const typename Ctx::F& base, long e) {
    typename Ctx::F r = Ctx::mono(Rational(1), 0, 0);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

enum class BetaForm { numbers_paper, poly_paper, numbers_reference, poly_reference };

// Theorem 1: (1/(1-q))^(n-1) sum_m binom(n,m)(-1)^m m
//            q^((n-1)(k-1)/2 + k + m - 2) / ((1-q^(m-(n-1)/2-2))(1-q^(m-(n-1)/2))).
// All exponents are held as twice-values so v-powers stay integral; the
// deformed copies of (n-1)/2 carry z^(k-1) upstairs and z^(-1) downstairs.
template <class Ctx>
typename Ctx::F numbers_paper_sum(long n, long k) {
    using F = typename Ctx::F;
    const F one = Ctx::mono(Rational(1), 0, 0);
    F total;
    for (long m = 1; m <= n; ++m) {
        const Rational coef = binomial(n, m) * Rational(m % 2 == 0 ? m : -m);
        const F num = Ctx::mono(coef, (n - 1) * (k - 1) + 2 * (k + m - 2), k - 1);
        const F d1 = one - Ctx::mono(Rational(1), 2 * (m - 2) - (n - 1), -1);
        const F d2 = one - Ctx::mono(Rational(1), 2 * m - (n - 1), -1);
        total = total + num / (d1 * d2);
    }
    const F one_minus_q = one - Ctx::mono(Rational(1), 2, 0);
    return total / ctx_pow<Ctx>(one_minus_q, n - 1);
}

// Theorem 2: 1/([2]_q (1-q)^(n-2)) sum_m binom(n,m)(-1)^m
//            (m q^(k(m-1))/(1-q^(m-(n-1)/2-2)) - m q^(k(m+1))/(1-q^(m-(n-1)/2))).
// The n = 1 prefactor exponent is negative exactly as printed.
template <class Ctx>
typename Ctx::F poly_paper_sum(long n, long k) {
    using F = typename Ctx::F;
    const F one = Ctx::mono(Rational(1), 0, 0);
    F total;
    for (long m = 1; m <= n; ++m) {
        const Rational coef = binomial(n, m) * Rational(m % 2 == 0 ? m : -m);
        const F d1 = one - Ctx::mono(Rational(1), 2 * (m - 2) - (n - 1), -1);
        const F d2 = one - Ctx::mono(Rational(1), 2 * m - (n - 1), -1);
        total = total + Ctx::mono(coef, 2 * k * (m - 1), 0) / d1 -
                Ctx::mono(coef, 2 * k * (m + 1), 0) / d2;
    }
    const F two_bracket = one + Ctx::mono(Rational(1), 2, 0);
    const F one_minus_q = one - Ctx::mono(Rational(1), 2, 0);
    total = total / two_bracket;
    if (n >= 2) return total / ctx_pow<Ctx>(one_minus_q, n - 2);
    return total * ctx_pow<Ctx>(one_minus_q, 2 - n);
}

// Reference oracle for the numbers: expand [j]_{q^2}[j]_q^(n-1) binomially,
// replace each geometric series sum_j q^(c j) by 1/(1 - q^c), and keep the
// paper's outer factor -n q^(k + (n-1)k/2). The exponents c run over
// i + 1 - (n-1)/2 and i - 1 - (n-1)/2 for i = 0..n-1.
template <class Ctx>
typename Ctx::F numbers_reference_sum(long n, long k) {
    using F = typename Ctx::F;
    const F one = Ctx::mono(Rational(1), 0, 0);
    F total;
    for (long i = 0; i < n; ++i) {
        const long c1 = 2 * i + 2 - (n - 1);
        const long c2 = 2 * i - 2 - (n - 1);
        const long s = (n - 1 - i) % 2 == 0 ? 1 : -1;
        const F coef = Ctx::mono(binomial(n - 1, i) * s, 0, 0);
        const F g1 = one / (one - Ctx::mono(Rational(1), c1, -1));
        const F g2 = one / (one - Ctx::mono(Rational(1), c2, -1));
        total = total + coef * (g1 - g2);
    }
    const F pref = Ctx::mono(Rational(-n), 2 * k + (n - 1) * k, k);
    const F q2_minus_1 = Ctx::mono(Rational(1), 4, 0) - one;
    const F q_minus_1 = Ctx::mono(Rational(1), 2, 0) - one;
    return total * pref / (q2_minus_1 * ctx_pow<Ctx>(q_minus_1, n - 1));
}

// Reference oracle for the polynomials: same continuation applied to the
// shifted summand q^(-j)[j+k]_{q^2}[j+k]_q^(n-1) q^(-(n-1)j/2); the shift
// moves q^((i+2)k) and q^(ik) onto the two geometric pieces and removes the
// outer v/z prefactor.
template <class Ctx>
typename Ctx::F poly_reference_sum(long n, long k) {
    using F = typename Ctx::F;
    const F one = Ctx::mono(Rational(1), 0, 0);
    F total;
    for (long i = 0; i < n; ++i) {
        const long c1 = 2 * i + 2 - (n - 1);
        const long c2 = 2 * i - 2 - (n - 1);
        const long s = (n - 1 - i) % 2 == 0 ? 1 : -1;
        const F coef = Ctx::mono(binomial(n - 1, i) * s, 0, 0);
        const F g1 = Ctx::mono(Rational(1), 2 * (i + 2) * k, 0) /
                     (one - Ctx::mono(Rational(1), c1, -1));
        const F g2 =
            Ctx::mono(Rational(1), 2 * i * k, 0) / (one - Ctx::mono(Rational(1), c2, -1));
        total = total + coef * (g1 - g2);
    }
    const F q2_minus_1 = Ctx::mono(Rational(1), 4, 0) - one;
    const F q_minus_1 = Ctx::mono(Rational(1), 2, 0) - one;
    return total * Ctx::mono(Rational(-n), 0, 0) / (q2_minus_1 * ctx_pow<Ctx>(q_minus_1, n - 1));
}

template <class Ctx>
typename Ctx::F beta_sum(BetaForm form, long n, long k) {
    switch (form) {
        case BetaForm::numbers_paper: return numbers_paper_sum<Ctx>(n, k);
        case BetaForm::poly_paper: return poly_paper_sum<Ctx>(n, k);
        case BetaForm::numbers_reference: return numbers_reference_sum<Ctx>(n, k);
        default: return poly_reference_sum<Ctx>(n, k);
    }
}

// m-indices of the printed theorems whose denominator exponents vanish.
inline std::vector<long> paper_singular_ms(long n) {
    std::vector<long> ms;
    for (long m = 0; m <= n; ++m)
        if (2 * m - (n - 1) - 4 == 0 || 2 * m - (n - 1) == 0) ms.push_back(m);
    return ms;
}

// i-indices of the binomial expansion whose geometric exponent vanishes.
inline std::vector<long> reference_singular_is(long n) {
    std::vector<long> is;
    for (long i = 0; i < n; ++i)
        if (2 * i + 2 - (n - 1) == 0 || 2 * i - 2 - (n - 1) == 0) is.push_back(i);
    return is;
}

inline RegularizedValue make_regularized(BetaForm form, long n, long k) {
    const bool paper_form =
        form == BetaForm::numbers_paper || form == BetaForm::poly_paper;
    RegularizedValue out;
    out.singular_terms = paper_form ? paper_singular_ms(n) : reference_singular_is(n);
    bool need_z = false;
    for (long t : out.singular_terms)
        // The paper forms drop m = 0 before dividing, so only m >= 1 forces
        // the deformation; every reference-side zero exponent does.
        if (!paper_form || t >= 1) need_z = true;
    if (!need_z) {
        out.maybe_value = beta_sum<PlainCtx>(form, n, k);
        out.status = out.singular_terms.empty() ? RegStatus::regular : RegStatus::regularized;
        return out;
    }
    try {
        out.maybe_value = DeformedCtx::reduce(beta_sum<DeformedCtx>(form, n, k));
        out.status = RegStatus::regularized;
    } catch (const SingularAtZ1&) {
        out.status = RegStatus::singular;
    }
    return out;
}

}  // namespace detail

inline RegularizedValue beta_star_paper(long n, long k) {
    if (n < 1 || k < 1) throw Error("beta_star_paper requires n, k >= 1");
    return detail::make_regularized(detail::BetaForm::numbers_paper, n, k);
}

inline RegularizedValue beta_star_poly_paper(long n, long k) {
    if (n < 1 || k < 1) throw Error("beta_star_poly_paper requires n, k >= 1");
    return detail::make_regularized(detail::BetaForm::poly_paper, n, k);
}

inline RegularizedValue beta_star_reference(long n, long k) {
    if (n < 1 || k < 1) throw Error("beta_star_reference requires n, k >= 1");
    return detail::make_regularized(detail::BetaForm::numbers_reference, n, k);
}

inline RegularizedValue beta_star_poly_reference(long n, long k) {
    if (n < 1 || k < 1) throw Error("beta_star_poly_reference requires n, k >= 1");
    return detail::make_regularized(detail::BetaForm::poly_reference, n, k);
}

enum class Thm3Source { paper, reference };

inline std::string to_string(Thm3Source s) {
    return s == Thm3Source::paper ? "paper" : "reference";
}

// The general formula's right side (beta*(k) - beta*)/n for the chosen pair
// of closed forms. A singular component makes the quotient singular; a
// regularized one marks the quotient regularized.
inline RegularizedValue thm3_rhs(long n, long k, Thm3Source source) {
    if (n < 1 || k < 1) throw Error("thm3_rhs requires n, k >= 1");
    const RegularizedValue poly = source == Thm3Source::paper ? beta_star_poly_paper(n, k)
                                                              : beta_star_poly_reference(n, k);
    const RegularizedValue num = source == Thm3Source::paper ? beta_star_paper(n, k)
                                                             : beta_star_reference(n, k);
    RegularizedValue out;
    out.singular_terms = poly.singular_terms;
    for (long t : num.singular_terms)
        if (std::find(out.singular_terms.begin(), out.singular_terms.end(), t) ==
            out.singular_terms.end())
            out.singular_terms.push_back(t);
    std::sort(out.singular_terms.begin(), out.singular_terms.end());
    if (poly.status == RegStatus::singular || num.status == RegStatus::singular) {
        out.status = RegStatus::singular;
        return out;
    }
    out.maybe_value = (poly.value() - num.value()) * Rational(1, n);
    out.status = poly.status == RegStatus::regular && num.status == RegStatus::regular
                     ? RegStatus::regular
                     : RegStatus::regularized;
    return out;
}

inline RatFunc warnaar_rhs(long n) {
    if (n < 0) throw Error("warnaar_rhs requires n >= 0");
    return q_binomial(n + 1, 2).pow(2);
}

// The four displayed closed forms for the power sums, m = 2..5, including
// the half-integer brackets [n + 1/2]_q and [3/2]_q of the odd cases.
inline RatFunc schlosser_rhs(long m, long n) {
    if (n < 0) throw Error("schlosser_rhs requires n >= 0");
    const RatFunc one(Rational(1));
    const auto qp = [](long twice) { return RatFunc::monomial(Rational(1), twice); };
    switch (m) {
        case 2:
            return q_bracket(QExp::from_integer(n)) * q_bracket(QExp::from_integer(n + 1)) *
                   q_bracket(QExp::from_twice(2 * n + 1)) /
                   (q_bracket(QExp::from_integer(1)) * q_bracket(QExp::from_integer(2)) *
                    q_bracket(QExp::from_twice(3)));
        case 3:
            return q_binomial(n + 1, 2).pow(2);
        case 4: {
            const RatFunc f = (one - qp(2 * n)) * (one - qp(2 * n + 2)) * (one - qp(2 * n + 1)) /
                              ((one - qp(2)) * (one - qp(4)) * (one - qp(5)));
            const RatFunc g = (one - qp(2 * n)) * (one - qp(2 * n + 2)) / (one - qp(2)).pow(2) -
                              qp(2 * n) * (one - qp(1)) / (one - qp(3));
            return f * g;
        }
        case 5: {
            const RatFunc f = (one - qp(2 * n)).pow(2) * (one - qp(2 * n + 2)).pow(2) /
                              ((one - qp(2)).pow(2) * (one - qp(4)) * (one - qp(6)));
            const RatFunc g = (one - qp(2 * n)) * (one - qp(2 * n + 2)) / (one - qp(2)).pow(2) -
                              qp(2 * n) * (one - qp(2)) / (one - qp(4));
            return f * g;
        }
        default:
            throw UnsupportedM("no displayed closed form for m = " + std::to_string(m));
    }
}

// linear: (1/2)([n]^2 - [2n]/[2]);  square: (1/3)[n]^3 - (1/2)([n]^2 - [2n]/[2]) - (1/3)[3n]/[3].
inline RatFunc kim_rhs(long n, KimVariant variant) {
    if (n < 1) throw Error("kim_rhs requires n >= 1");
    const RatFunc br_n = q_bracket(QExp::from_integer(n));
    const RatFunc linear_part =
        (br_n.pow(2) - q_bracket(QExp::from_integer(2 * n)) / q_bracket(QExp::from_integer(2))) *
        Rational(1, 2);
    if (variant == KimVariant::linear) return linear_part;
    return br_n.pow(3) * Rational(1, 3) - linear_part -
           q_bracket(QExp::from_integer(3 * n)) / q_bracket(QExp::from_integer(3)) *
               Rational(1, 3);
}

}  // namespace qfaulhaber
