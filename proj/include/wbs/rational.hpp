#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "wbs/errors.hpp"

namespace wbs {

using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin canonicalizing wrapper over GMP's mpq_class: every
// constructor that could produce a non-canonical value calls canonicalize(),
// and all arithmetic preserves canonical form, so the invariant holds for the
// lifetime of a value.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p", "p/q", and plain decimal strings ("2.5", "-.125").
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Rational: empty string");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Rational(parse_int(text.substr(0, slash)),
                            parse_int(text.substr(slash + 1)));
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            size_t frac_len = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw std::invalid_argument("Rational: bad literal '" + text + "'");
            Integer den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            return Rational(parse_int(digits), den);
        }
        return Rational(parse_int(text));
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    // x^e for any integer e; e < 0 inverts (x must be nonzero).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        bool invert = e < 0;
        unsigned long mag = invert ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), mag);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), mag);
        if (invert) {
            if (n == 0) throw std::domain_error("Rational: 0 raised to negative power");
            return Rational(d, n);
        }
        return Rational(n, d);
    }

    // Canonical "num/den", or just "num" for integers. parse() inverts this.
    std::string to_fraction_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Fixed-point decimal with `digits` fractional digits, rounded half away
    // from zero. Pure integer long division, so the output is deterministic.
    std::string to_decimal_string(size_t digits) const {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        Integer n = num() * scale;
        bool neg = n < 0;
        if (neg) n = -n;
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), den().get_mpz_t());
        if (2 * r >= den()) q += 1;
        std::string s = q.get_str();
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        std::string out = (neg ? "-" : "") + s.substr(0, s.size() - digits);
        if (digits > 0) out += "." + s.substr(s.size() - digits);
        return out;
    }

    const mpq_class& raw() const { return q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_fraction_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    static Integer parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty integer part");
        std::string body = (s[0] == '+') ? s.substr(1) : s;
        try {
            return Integer(body, 10); // explicit base; GMP's default sniffs octal/hex
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: bad integer '" + s + "'");
        }
    }

    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace wbs
