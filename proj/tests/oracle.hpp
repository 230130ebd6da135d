#pragma once

// Test-only oracles. Deliberately naive routes, independent of the library's
// incremental/multiplicative implementations: binomials come from Pascal's
// triangle, powers from repeated multiplication, sums from term-by-term
// accumulation.

#include <vector>

#include "wbs/rational.hpp"

namespace oracle {

using wbs::Integer;
using wbs::Rational;

// C(m, i) by the Pascal recurrence (additive, no division).
inline Integer pascal_binomial(long m, long i) {
    if (i < 0 || i > m) return 0;
    std::vector<Integer> row{1};
    for (long n = 1; n <= m; ++n) {
        std::vector<Integer> next(n + 1, Integer(0));
        for (long j = 0; j <= n; ++j) {
            if (j > 0) next[j] += row[j - 1];
            if (j < n) next[j] += row[j];
        }
        row = std::move(next);
    }
    return row[i];
}

inline Rational repeated_pow(const Rational& x, long e) {
    Rational acc = 1;
    for (long i = 0; i < e; ++i) acc *= x;
    return acc;
}

inline Rational naive_weighted_sum(long m, const Rational& a, long r) {
    Rational sum = 0;
    for (long i = 0; i <= r; ++i)
        sum += Rational(pascal_binomial(m, i)) * repeated_pow(a, i);
    return sum;
}

inline Rational naive_f(long m, const Rational& a, long r) {
    return naive_weighted_sum(m, a, r) / repeated_pow(Rational(1) + a, r);
}

// Strong log-concavity: x_k x_l >= x_{k-1} x_{l+1} for all 0 < k <= l,
// checked over every pair.
inline bool strongly_log_concave(const std::vector<Rational>& xs) {
    long n = static_cast<long>(xs.size());
    for (long k = 1; k < n; ++k)
        for (long l = k; l + 1 < n; ++l)
            if (xs[k] * xs[l] < xs[k - 1] * xs[l + 1]) return false;
    return true;
}

} // namespace oracle
