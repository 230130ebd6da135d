#pragma once

#include <string>
#include <vector>

#include "wbs/errors.hpp"
#include "wbs/rational.hpp"

namespace wbs {

// The central object: the weighted binomial sum
//
//     f(m, a, r) = (1+a)^(-r) * sum_{i=0}^{r} C(m,i) a^i,   0 <= r <= m,
//
// for a positive rational weight a. The sequence {f(m,a,r)}_{r=0..m} starts
// and ends at 1, is log-concave, and for integer a >= 1 peaks at
// r_a(m) = floor((am-(a-1))/(2a+1)) + 1 for all m outside a small
// exceptional set.

// All exact-path sequence work is capped here; beyond this the resident
// big-rational sizes stop being desk-scale.
inline constexpr long kMaxSequenceM = 50000;

// C(m, i); zero when i is out of range, which lets sum boundaries stay
// uniform in the checkers.
inline Integer binomial(long m, long i) {
    if (m < 0) throw std::invalid_argument("binomial: m must be >= 0");
    if (i < 0 || i > m) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(i));
    return r;
}

// Parameters (m, a) of one sequence. a > 0, 0 <= m <= kMaxSequenceM.
struct SeqSpec {
    long m;
    Rational a;

    SeqSpec(long m_, Rational a_) : m(m_), a(std::move(a_)) {
        if (m < 0) throw std::invalid_argument("SeqSpec: m must be >= 0");
        if (m > kMaxSequenceM)
            throw std::invalid_argument("SeqSpec: m exceeds the exact-path guard of " +
                                        std::to_string(kMaxSequenceM));
        if (a.sign() <= 0) throw std::invalid_argument("SeqSpec: a must be > 0");
    }
};

// sum_{i=0}^{r} C(m,i) a^i, exact.
inline Rational weighted_partial_sum(long m, const Rational& a, long r) {
    if (m < 0) throw std::invalid_argument("weighted_partial_sum: m must be >= 0");
    if (a.sign() <= 0) throw std::invalid_argument("weighted_partial_sum: a must be > 0");
    if (r < 0 || r > m) throw std::invalid_argument("weighted_partial_sum: r out of [0, m]");
    Integer binom = 1;
    Rational apow = 1;
    Rational sum = 1;
    for (long i = 1; i <= r; ++i) {
        binom *= (m - i + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i));
        apow *= a;
        sum += Rational(binom) * apow;
    }
    return sum;
}

inline Rational f_value(long m, const Rational& a, long r) {
    return weighted_partial_sum(m, a, r) / (Rational(1) + a).pow(r);
}

struct FSequence {
    SeqSpec spec;
    std::vector<Rational> values; // values[r] = f(m, a, r)
};

// Builds the whole sequence in O(m) big-number operations: the binomial, the
// power of a and the power of (1+a) are all carried incrementally.
inline FSequence f_sequence(const SeqSpec& spec) {
    FSequence seq{spec, {}};
    seq.values.reserve(spec.m + 1);
    seq.values.emplace_back(1);
    Integer binom = 1;
    Rational apow = 1;
    Rational sum = 1;
    Rational scale_pow = 1;
    const Rational scale = Rational(1) + spec.a;
    for (long r = 1; r <= spec.m; ++r) {
        binom *= (spec.m - r + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(r));
        apow *= spec.a;
        sum += Rational(binom) * apow;
        scale_pow *= scale;
        seq.values.push_back(sum / scale_pow);
    }
    return seq;
}

// r_a(m) = floor((am - (a-1)) / (2a+1)) + 1, the proven peak index for
// integer a >= 1 and m >= 2 off the exceptional set. Only integer weights
// are in scope here; rational a has no proven peak formula.
inline long predicted_peak(long m, long a) {
    if (a < 1) throw scope_error("predicted_peak: requires integer a >= 1");
    if (m < 2) throw scope_error("predicted_peak: requires m >= 2");
    long long num = static_cast<long long>(a) * m - (a - 1);
    long long den = 2 * static_cast<long long>(a) + 1;
    return static_cast<long>(num / den) + 1; // num >= 0, so / is the floor
}

// The finitely many m where the peak-location statement does not apply:
// {3, 2a+4, 4a+5}, plus 12 = 6a+6 when a = 1.
inline std::vector<long> exceptional_m_set(long a) {
    if (a < 1) throw std::invalid_argument("exceptional_m_set: a must be >= 1");
    if (a == 1) return {3, 6, 9, 12};
    return {3, 2 * a + 4, 4 * a + 5};
}

inline bool is_exceptional_m(long m, long a) {
    for (long e : exceptional_m_set(a))
        if (e == m) return true;
    return false;
}

struct PeakReport {
    long argmax_min = 0;
    std::vector<long> tie_indices; // every index attaining the maximum, sorted
    Rational peak_value;
};

// Exact argmax scan of a sequence; reports all maximizing indices.
inline PeakReport observed_peak(const FSequence& seq) {
    PeakReport report;
    report.peak_value = seq.values.at(0);
    report.tie_indices = {0};
    for (long r = 1; r < static_cast<long>(seq.values.size()); ++r) {
        const Rational& v = seq.values[r];
        if (v > report.peak_value) {
            report.peak_value = v;
            report.tie_indices = {r};
        } else if (v == report.peak_value) {
            report.tie_indices.push_back(r);
        }
    }
    report.argmax_min = report.tie_indices.front();
    return report;
}

} // namespace wbs
