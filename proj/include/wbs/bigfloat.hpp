#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wbs/rational.hpp"

namespace wbs {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

// Radix-2 float with configurable significand precision, rounding to nearest
// with ties to even (MPFR). The exact side of the library crosses into
// approximate arithmetic only through this type, and every primitive
// operation (set-from-rational, sqrt, pi, +-*/) is correctly rounded at the
// result precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_long(long v, mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.precision(), y.precision()));
        mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.precision(), y.precision()));
        mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.precision(), y.precision()));
        mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.precision(), y.precision()));
        mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& x, const BigFloat& y) { return x.compare(y) < 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return x.compare(y) > 0; }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return x.compare(y) <= 0; }
    friend bool operator>=(const BigFloat& x, const BigFloat& y) { return x.compare(y) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact value of the stored float as a rational (the significand/exponent
    // pair is finite, so this is lossless).
    Rational to_rational() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return Rational(q.get_num(), q.get_den());
    }

    // Decimal string with the given number of significant digits; 0 means
    // every digit the precision can carry.
    std::string to_string(size_t significant_digits = 0) const {
        size_t digits = significant_digits;
        if (digits == 0)
            digits = static_cast<size_t>(std::ceil(precision() * 0.3010299956639812)) + 2;
        std::vector<char> buf(digits + 64);
        mpfr_snprintf(buf.data(), buf.size(), "%.*RNg", static_cast<int>(digits), v_);
        return std::string(buf.data());
    }

private:
    mpfr_t v_;
};

inline BigFloat sqrt(const BigFloat& x) { return x.sqrt(); }
inline BigFloat abs(const BigFloat& x) { return x.abs(); }

} // namespace wbs
