#pragma once

#include <map>
#include <string>
#include <utility>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

// Sparse univariate polynomial over the rationals: exponent -> nonzero
// coefficient.  The zero polynomial is the empty map.  Exponents are
// non-negative; callers that need q^e with e < 0 place the power in a
// denominator (see RatFunc::monomial).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }

    static Poly monomial(const Rational& coeff, long exp) {
        if (exp < 0) throw Error("Poly exponents must be non-negative");
        Poly p;
        if (coeff != 0) p.coeffs_[exp] = coeff;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    const Rational& leading_coeff() const {
        static const Rational kZero(0);
        return coeffs_.empty() ? kZero : coeffs_.rbegin()->second;
    }

    Rational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        Poly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = c * s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading_coeff());
    }

    // Shifts every exponent up by s >= 0 (multiplication by v^s).
    Poly shifted(long s) const {
        if (s < 0) throw Error("negative shift");
        Poly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + s] = c;
        return r;
    }

    Rational eval(const Rational& x) const {
        // sparse Horner over descending exponents
        Rational acc(0);
        long prev_exp = -1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (prev_exp >= 0) acc *= rational_pow(x, prev_exp - it->first);
            acc += it->second;
            prev_exp = it->first;
        }
        if (prev_exp > 0) acc *= rational_pow(x, prev_exp);
        return acc;
    }

    // Euclidean division over Q: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
        Poly q, r = a;
        const long db = b.degree();
        const Rational lb = b.leading_coeff();
        while (!r.is_zero() && r.degree() >= db) {
            const long e = r.degree() - db;
            const Rational c = r.leading_coeff() / lb;
            q.add_term(e, c);
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(eb + e, -c * cb);
        }
        return {q, r};
    }

    // Monic gcd via the Euclidean algorithm; gcd(p, 0) = monic(p), gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly rem = divmod(a, b).second;
            a = std::move(b);
            b = std::move(rem);
        }
        return a.monic();
    }

    Poly derivative() const {
        Poly r;
        for (const auto& [e, c] : coeffs_)
            if (e > 0) r.coeffs_[e - 1] = c * Rational(e);
        return r;
    }

    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        Poly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + 1] = c / Rational(e + 1);
        return r;
    }

    // Deterministic rendering: strictly decreasing exponents, coefficients as
    // "a" or "a/b", unit coefficients omitted on variable terms.
    std::string to_string(const std::string& var = "v") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const long e = it->first;
            Rational c = it->second;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = (c == 1);
            if (e == 0) {
                out += coeff_str(c);
            } else {
                if (!unit) out += coeff_str(c) + "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

  private:
    static std::string coeff_str(const Rational& r) { return r.get_str(); }

    void add_term(long e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }

    std::map<long, Rational> coeffs_;
};

}  // namespace qfaulhaber
