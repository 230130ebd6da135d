#pragma once

#include <string>

#include "wbs/binom.hpp"
#include "wbs/errors.hpp"
#include "wbs/rational.hpp"

namespace wbs {

// Reed-Muller parameter bridge. RM(r, m) has length n = 2^m, dimension
// k = sum_{i<=r} C(m,i) and minimum distance d = 2^(m-r), so the
// rate-times-relative-distance figure of merit is
//
//   k d / n = 2^(-r) sum_{i<=r} C(m,i) = f(m, 1, r),
//
// which is why the a = 1 sequence peak identifies the best r. Parameters
// only; no generator matrices or decoding.

struct CodeParams {
    long r = 0;
    long m = 0;
    Integer n; // 2^m
    Integer k; // sum_{i<=r} C(m,i)
    Integer d; // 2^(m-r)
};

inline CodeParams rm_params(long r, long m) {
    if (m < 0 || r < 0 || r > m)
        throw std::invalid_argument("rm_params: need 0 <= r <= m");
    CodeParams p;
    p.r = r;
    p.m = m;
    mpz_ui_pow_ui(p.n.get_mpz_t(), 2, static_cast<unsigned long>(m));
    mpz_ui_pow_ui(p.d.get_mpz_t(), 2, static_cast<unsigned long>(m - r));
    p.k = 0;
    Integer binom = 1;
    for (long i = 0; i <= r; ++i) {
        p.k += binom;
        if (i < r) {
            binom *= (m - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(i + 1));
        }
    }
    return p;
}

// k*d/n, asserted exactly equal to f(m, 1, r); a mismatch would falsify the
// bridge identity and is fatal.
inline Rational rate_distance_product(long r, long m) {
    CodeParams p = rm_params(r, m);
    Rational value(p.k * p.d, p.n);
    Rational via_f = f_value(m, Rational(1), r);
    if (value != via_f)
        throw identity_violation("rate_distance_product: kd/n = " + value.to_fraction_string() +
                                 " but f(m,1,r) = " + via_f.to_fraction_string() + " at r=" +
                                 std::to_string(r) + " m=" + std::to_string(m));
    return value;
}

// The r maximizing kd/n for fixed m: the exact argmax of the a = 1 sequence.
inline PeakReport best_r(long m) {
    if (m < 2) throw std::invalid_argument("best_r: m must be >= 2");
    return observed_peak(f_sequence(SeqSpec(m, Rational(1))));
}

} // namespace wbs
