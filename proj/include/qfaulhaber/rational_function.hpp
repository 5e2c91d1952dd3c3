#pragma once

#include <string>
#include <utility>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/polynomial.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

// Canonical rational function in v over Q.  Invariants after construction:
// den != 0, den monic, gcd(num, den) = 1, and the zero function is 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly(Rational(1))) {}
    explicit RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(Rational(1))) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly(Rational(1))) {}
    RatFunc(Poly num, Poly den) { normalize(std::move(num), std::move(den)); }

    // c * v^e for any integer e; negative exponents go into the denominator.
    static RatFunc monomial(const Rational& coeff, long v_exp) {
        if (v_exp >= 0) return RatFunc(Poly::monomial(coeff, v_exp));
        return RatFunc(Poly(coeff), Poly::monomial(Rational(1), -v_exp));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZeroFunction();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator*(const RatFunc& a, const Rational& s) { return a * RatFunc(s); }
    friend RatFunc operator*(const Rational& s, const RatFunc& a) { return a * RatFunc(s); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(long e) const {
        if (e < 0) return (RatFunc(Rational(1)) / *this).pow(-e);
        RatFunc acc(Rational(1));
        RatFunc base = *this;
        for (long n = e; n != 0; n >>= 1) {
            if (n & 1L) acc = acc * base;
            if (n > 1) base = base * base;
        }
        return acc;
    }

    Rational eval_at(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d == 0) throw PoleAtPoint("denominator vanishes at " + qfaulhaber::to_string(x));
        return num_.eval(x) / d;
    }

    // Evaluates the reduced fraction at v = 1; gcd(num, den) = 1 means a
    // vanishing denominator is a genuine pole, not a removable one.
    Rational limit_at_v1() const {
        const Rational d = den_.eval(Rational(1));
        if (d == 0) throw PoleAtOne();
        return num_.eval(Rational(1)) / d;
    }

    // "(NUM)" when den = 1, otherwise "(NUM) / (DEN)".
    std::string to_canonical_string() const {
        const std::string n = "(" + num_.to_string() + ")";
        if (den_.degree() == 0) return n;  // monic degree-0 den is exactly 1
        return n + " / (" + den_.to_string() + ")";
    }

  private:
    void normalize(Poly num, Poly den) {
        if (den.is_zero()) throw ZeroDenominator();
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly(Rational(1));
            return;
        }
        const Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        const Rational lc = den.leading_coeff();
        num_ = num * (Rational(1) / lc);
        den_ = den * (Rational(1) / lc);
    }

    Poly num_, den_;
};

}  // namespace qfaulhaber
