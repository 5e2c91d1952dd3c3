#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

// Thin arbitrary-precision float on MPFR with round-to-nearest everywhere.
// Every operation is correctly rounded at the result's precision, so fixed
// inputs and precision give bit-identical outputs on any platform. Binary
// operations carry the larger operand precision.
class BigFloat {
public:
    static constexpr long kDefaultPrecision = 256;
    static constexpr long kMinPrecision = 64;

    BigFloat() : BigFloat(kDefaultPrecision) {}

    explicit BigFloat(long precision) {
        if (precision < kMinPrecision) throw Error("BigFloat precision must be >= 64");
        mpfr_init2(x_, precision);
        mpfr_set_zero(x_, 1);
    }

    static BigFloat of(long value, long precision = kDefaultPrecision) {
        BigFloat r(precision);
        mpfr_set_si(r.x_, value, MPFR_RNDN);
        return r;
    }

    static BigFloat from_rational(const Rational& value, long precision = kDefaultPrecision) {
        BigFloat r(precision);
        mpfr_set_q(r.x_, value.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat of_double(double value, long precision = kDefaultPrecision) {
        BigFloat r(precision);
        mpfr_set_d(r.x_, value, MPFR_RNDN);
        return r;
    }

    // Parses a decimal literal (scientific notation allowed) at the given
    // precision; used for frozen reference constants in tests.
    static BigFloat from_string(const std::string& text, long precision = kDefaultPrecision) {
        BigFloat r(precision);
        if (mpfr_set_str(r.x_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw Error("malformed float literal: " + text);
        return r;
    }

    static BigFloat two_power(long e, long precision = kDefaultPrecision) {
        BigFloat r(precision);
        mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(long precision = kDefaultPrecision) {
        BigFloat r(precision);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(x_); }

    long precision() const { return mpfr_get_prec(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(precision());
        mpfr_exp(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat cos() const {
        BigFloat r(precision());
        mpfr_cos(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat pow(long e) const {
        BigFloat r(precision());
        mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) != 0; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Fixed-width scientific rendering, 40 fractional digits by default —
    // deterministic and ample for the 256-bit carrier.
    std::string to_string(int digits = 40) const {
        char* raw = nullptr;
        if (mpfr_asprintf(&raw, "%.*Re", digits, x_) < 0) throw Error("mpfr formatting failed");
        std::string s(raw);
        mpfr_free_str(raw);
        return s;
    }

    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

}  // namespace qfaulhaber
