#pragma once

#include <map>
#include <string>
#include <utility>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/polynomial.hpp"
#include "qfaulhaber/rational.hpp"
#include "qfaulhaber/rational_function.hpp"

namespace qfaulhaber {

// Bivariate polynomial in (v, z) with rational coefficients, stored as
// z-exponent -> v-polynomial.  z is the outer variable throughout; the only
// consumer is the z -> 1 regularization limit, so no general multivariate
// machinery is needed.
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(const Poly& p) {
        if (!p.is_zero()) coeffs_[0] = p;
    }

    static Poly2 monomial(const Rational& coeff, long v_exp, long z_exp) {
        if (v_exp < 0 || z_exp < 0) throw Error("Poly2 exponents must be non-negative");
        Poly2 p;
        if (coeff != 0) p.coeffs_[z_exp] = Poly::monomial(coeff, v_exp);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long z_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    const std::map<long, Poly>& coeffs() const { return coeffs_; }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [e, p] : b.coeffs_) r.add_term(e, p);
        return r;
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [e, p] : b.coeffs_) r.add_term(e, -p);
        return r;
    }
    Poly2 operator-() const {
        Poly2 r;
        for (const auto& [e, p] : coeffs_) r.coeffs_[e] = -p;
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ea, pa] : a.coeffs_)
            for (const auto& [eb, pb] : b.coeffs_) r.add_term(ea + eb, pa * pb);
        return r;
    }

    bool operator==(const Poly2& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    // Substitutes z = 1: the sum of the z-coefficients.  This is also the
    // remainder on division by (z - 1), so the result is zero exactly when
    // (z - 1) divides the polynomial.
    Poly at_z1() const {
        Poly r;
        for (const auto& [e, p] : coeffs_) r = r + p;
        return r;
    }

    // Exact quotient by (z - 1) via synthetic division; requires at_z1() == 0.
    // With p = sum c_e z^e, the quotient coefficient of z^e is sum_{j>e} c_j.
    Poly2 quotient_by_z_minus_1() const {
        if (!at_z1().is_zero()) throw Error("not divisible by (z - 1)");
        Poly2 q;
        Poly suffix;
        const long top = z_degree();
        for (long e = top; e >= 1; --e) {
            auto it = coeffs_.find(e);
            if (it != coeffs_.end()) suffix = suffix + it->second;
            if (!suffix.is_zero()) q.coeffs_[e - 1] = suffix;
        }
        return q;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.to_string() + ")";
            if (it->first == 1)
                out += "*z";
            else if (it->first > 1)
                out += "*z^" + std::to_string(it->first);
        }
        return out;
    }

  private:
    void add_term(long e, const Poly& p) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (!p.is_zero()) coeffs_.emplace(e, p);
            return;
        }
        it->second = it->second + p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    std::map<long, Poly> coeffs_;
};

// Rational function in (v, z), kept as a raw fraction: den != 0 and zero is
// canonically 0/1, but num and den are otherwise not reduced.  Full
// bivariate gcds are needless here -- the one question ever asked of these
// fractions is their value at z = 1, and for that only the (z - 1) content
// matters.  subst_z1 strips it exactly; any other surviving common factor is
// nonzero at z = 1 and cancels in the returned univariate fraction.
class RatFunc2 {
  public:
    RatFunc2() : num_(), den_(Poly2(Poly(Rational(1)))) {}
    explicit RatFunc2(const Rational& c) : RatFunc2(Poly2(Poly(c)), Poly2(Poly(Rational(1)))) {}
    RatFunc2(Poly2 num, Poly2 den) {
        if (den.is_zero()) throw ZeroDenominator();
        if (num.is_zero()) {
            num_ = Poly2();
            den_ = Poly2(Poly(Rational(1)));
        } else {
            num_ = std::move(num);
            den_ = std::move(den);
        }
    }

    // c * v^a * z^b for any integer a, b; negative exponents go below.
    static RatFunc2 monomial(const Rational& coeff, long v_exp, long z_exp) {
        const long vn = v_exp >= 0 ? v_exp : 0;
        const long vd = v_exp >= 0 ? 0 : -v_exp;
        const long zn = z_exp >= 0 ? z_exp : 0;
        const long zd = z_exp >= 0 ? 0 : -z_exp;
        return RatFunc2(Poly2::monomial(coeff, vn, zn), Poly2::monomial(Rational(1), vd, zd));
    }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
        if (b.is_zero()) throw DivisionByZeroFunction();
        return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
    }

    // Equality as rational functions (cross-multiplication; there is no
    // canonical form to compare directly).
    bool operator==(const RatFunc2& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc2& o) const { return !(*this == o); }

    // The limit z -> 1.  Writing num = (z-1)^a * N and den = (z-1)^b * D with
    // N, D not divisible by (z - 1): a < b leaves a pole (SingularAtZ1),
    // a > b forces the value 0, and a == b gives N(v,1) / D(v,1) with
    // D(v,1) != 0 by construction.
    RatFunc subst_z1() const {
        if (num_.is_zero()) return RatFunc();
        Poly2 n = num_;
        Poly2 d = den_;
        long a = 0;
        long b = 0;
        while (n.at_z1().is_zero()) {
            n = n.quotient_by_z_minus_1();
            ++a;
        }
        while (d.at_z1().is_zero()) {
            d = d.quotient_by_z_minus_1();
            ++b;
        }
        if (a < b) throw SingularAtZ1();
        if (a > b) return RatFunc();
        return RatFunc(n.at_z1(), d.at_z1());
    }

  private:
    Poly2 num_, den_;
};

}  // namespace qfaulhaber
