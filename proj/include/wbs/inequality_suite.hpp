#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbs/binom.hpp"
#include "wbs/errors.hpp"
#include "wbs/rational.hpp"
#include "wbs/report.hpp"

namespace wbs {

// Instance checkers for the named inequalities behind the peak-location
// result. Every check evaluates both sides exactly (integer or rational) and
// returns a VerificationReport whose check_id matches the CLI token for the
// same statement.

namespace detail {

// sum_{i=lo}^{hi} C(m,i) a^i for integer a >= 1, exact. Out-of-range i
// contribute nothing.
inline Integer int_weighted_sum(long m, long a, long lo, long hi) {
    Integer sum = 0;
    if (lo < 0) lo = 0;
    if (hi > m) hi = m;
    if (lo > hi) return sum;
    Integer apow;
    mpz_pow_ui(apow.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(lo));
    Integer binom = binomial(m, lo);
    for (long i = lo; i <= hi; ++i) {
        sum += binom * apow;
        // advance C(m,i) -> C(m,i+1) and a^i -> a^(i+1)
        if (i < hi) {
            binom *= (m - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(i + 1));
            apow *= a;
        }
    }
    return sum;
}

inline Integer int_pow(long base, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline std::string param(long v) { return std::to_string(v); }

} // namespace detail

// Strict rise into the peak:  sum_{i=0}^{r_a-1} C(m,i) a^i < C(m,r_a) a^(r_a-1).
// Equivalent to f(m,a,r_a - 1) < f(m,a,r_a). Proven for m >= 2 outside the
// exceptional set, which is enforced as a scope precondition.
inline VerificationReport check_peak_rise(long m, long a) {
    if (m < 2) throw scope_error("peak rise: requires m >= 2");
    if (is_exceptional_m(m, a))
        throw scope_error("peak rise: m=" + std::to_string(m) +
                          " is in the excluded set {3, 2a+4, 4a+5" +
                          (a == 1 ? ", 12}" : "}") + " for a=" + std::to_string(a));
    long r = predicted_peak(m, a);
    Integer lhs = detail::int_weighted_sum(m, a, 0, r - 1);
    Integer rhs = binomial(m, r) * detail::int_pow(a, r - 1);
    VerificationReport report{"prop31", "m=" + std::to_string(m) + " a=" + std::to_string(a)};
    if (lhs < rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"m", detail::param(m)}, {"a", detail::param(a)}, {"r_a", detail::param(r)}},
            Rational(lhs), "<", Rational(rhs)));
    return report;
}

// Strict fall after the peak:  sum_{i=0}^{r_a} C(m,i) a^i > C(m,r_a+1) a^(r_a).
// Holds for every m >= 2 and integer a >= 1; when r_a = m the right side is
// an out-of-range binomial, i.e. 0, and the check passes trivially.
inline VerificationReport check_peak_fall(long m, long a) {
    long r = predicted_peak(m, a);
    Integer lhs = detail::int_weighted_sum(m, a, 0, r);
    Integer rhs = binomial(m, r + 1) * detail::int_pow(a, r);
    VerificationReport report{"prop32", "m=" + std::to_string(m) + " a=" + std::to_string(a)};
    if (lhs > rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"m", detail::param(m)}, {"a", detail::param(a)}, {"r_a", detail::param(r)}},
            Rational(lhs), ">", Rational(rhs)));
    return report;
}

// Term-pair domination below the peak: for every 1 <= i < r_a,
//
//   C(m,i-1) a^(i-1) + C(m,i) a^i  <=  C(m,i+1) a^i - C(m,i-1) a^(i-2),
//
// cross-checked against its integer reformulation
// i(i+1)(a+1) <= (m-2i-1)(m-i+1) a^2. Requires m >= 4 and m !≡ 3 (mod 2a+1).
inline VerificationReport check_adjacent_pair_bound(long m, long a) {
    if (m < 4) throw scope_error("adjacent pair bound: requires m >= 4");
    if (m % (2 * a + 1) == 3 % (2 * a + 1))
        throw scope_error("adjacent pair bound: m ≡ 3 (mod 2a+1) is out of scope");
    long r = predicted_peak(m, a);
    VerificationReport report{"lemma33", "m=" + std::to_string(m) + " a=" + std::to_string(a)};
    const Rational ra(a);
    for (long i = 1; i < r; ++i) {
        Rational lhs = Rational(binomial(m, i - 1)) * ra.pow(i - 1) +
                       Rational(binomial(m, i)) * ra.pow(i);
        Rational rhs = Rational(binomial(m, i + 1)) * ra.pow(i) -
                       Rational(binomial(m, i - 1)) * ra.pow(i - 2);
        bool direct = lhs <= rhs;
        Integer ref_lhs = Integer(i) * (i + 1) * (a + 1);
        Integer ref_rhs = Integer(m - 2 * i - 1) * (m - i + 1) * a * a;
        bool reformulated = ref_lhs <= ref_rhs;
        if (direct != reformulated)
            throw identity_violation("adjacent pair bound: direct and reformulated "
                                     "comparisons disagree at m=" + std::to_string(m) +
                                     " a=" + std::to_string(a) + " i=" + std::to_string(i));
        if (direct)
            report.record_pass();
        else
            report.record_fail(make_counterexample(
                {{"m", detail::param(m)}, {"a", detail::param(a)}, {"i", detail::param(i)}},
                lhs, "<=", rhs));
    }
    return report;
}

// The m ≡ 3 (mod 2a+1) class, m = (2a+1)k+3, r_a = ak+2:
//
//   sum_{i=0}^{ak+1} C(m,i) a^i < C(m,ak+2) a^(ak+1).
//
// Raw inequality evaluator with no scope filter; the statement's own scope is
// (a >= 2, k >= 3) or (a = 1, k >= 4), and the one documented failure inside
// the probed grid is (a=1, k=3), i.e. m = 12.
inline VerificationReport probe_m3_class_rise(long a, long k) {
    if (a < 1 || k < 0) throw std::invalid_argument("m3 class rise: need a >= 1, k >= 0");
    long m = (2 * a + 1) * k + 3;
    if (m > kMaxSequenceM) throw std::invalid_argument("m3 class rise: m exceeds guard");
    Integer lhs = detail::int_weighted_sum(m, a, 0, a * k + 1);
    Integer rhs = binomial(m, a * k + 2) * detail::int_pow(a, a * k + 1);
    VerificationReport report{"lemma35", "a=" + std::to_string(a) + " k=" + std::to_string(k)};
    if (lhs < rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"a", detail::param(a)}, {"k", detail::param(k)}, {"m", detail::param(m)}},
            Rational(lhs), "<", Rational(rhs)));
    return report;
}

inline VerificationReport check_m3_class_rise(long a, long k) {
    bool in_scope = (a >= 2 && k >= 3) || (a == 1 && k >= 4);
    if (!in_scope)
        throw scope_error("m3 class rise: scope is a >= 2, k >= 3 (or a = 1, k >= 4); "
                          "got a=" + std::to_string(a) + " k=" + std::to_string(k));
    return probe_m3_class_rise(a, k);
}

// Base case of the fall inequality on each residue block, m = (2a+1)l+5:
//
//   sum_{i=0}^{al+2} C((2a+1)l+5, i) a^i > C((2a+1)l+5, al+3) a^(al+2).
inline VerificationReport check_fall_base(long a, long l) {
    if (a < 1 || l < 0) throw std::invalid_argument("fall base: need a >= 1, l >= 0");
    long m = (2 * a + 1) * l + 5;
    if (m > kMaxSequenceM) throw std::invalid_argument("fall base: m exceeds guard");
    Integer lhs = detail::int_weighted_sum(m, a, 0, a * l + 2);
    Integer rhs = binomial(m, a * l + 3) * detail::int_pow(a, a * l + 2);
    VerificationReport report{"lemma38", "a=" + std::to_string(a) + " l=" + std::to_string(l)};
    if (lhs > rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"a", detail::param(a)}, {"l", detail::param(l)}, {"m", detail::param(m)}},
            Rational(lhs), ">", Rational(rhs)));
    return report;
}

// Window bound for the truncated-tail strengthening of the fall base case:
// T(n, a) = a^(n-2) + (n-1) a^(n-3) + (n(n-3)/2) a^(n-4).
inline Rational tail_window_upper(long n, const Rational& a) {
    if (n < 3) throw std::invalid_argument("tail_window_upper: requires n >= 3");
    return a.pow(n - 2) + Rational(n - 1) * a.pow(n - 3) +
           Rational(n * (n - 3), 2) * a.pow(n - 4);
}

// Truncated-tail rise inequality, valid for (n-3)/a <= l <= T(n, a):
//
//   sum_{i=al+2-(n-1)}^{al+2} C((2a+1)l+5, i) a^i > C((2a+1)l+5, al+3) a^(al+2).
//
// The window's left edge forces al+2-(n-1) >= 0.
inline VerificationReport check_tail_window_rise(long a, long l, long n) {
    if (a < 1 || l < 0) throw std::invalid_argument("tail window rise: need a >= 1, l >= 0");
    if (n < 3) throw scope_error("tail window rise: requires n >= 3");
    Rational upper = tail_window_upper(n, Rational(a));
    bool left_ok = static_cast<long long>(a) * l >= n - 3;
    bool right_ok = Rational(l) <= upper;
    if (!left_ok || !right_ok)
        throw scope_error("tail window rise: l=" + std::to_string(l) +
                          " outside the window (n-3)/a <= l <= " + upper.to_fraction_string() +
                          " for a=" + std::to_string(a) + " n=" + std::to_string(n));
    long m = (2 * a + 1) * l + 5;
    if (m > kMaxSequenceM) throw std::invalid_argument("tail window rise: m exceeds guard");
    Integer lhs = detail::int_weighted_sum(m, a, a * l + 2 - (n - 1), a * l + 2);
    Integer rhs = binomial(m, a * l + 3) * detail::int_pow(a, a * l + 2);
    VerificationReport report{"prop71", "a=" + std::to_string(a) + " l=" + std::to_string(l) +
                                            " n=" + std::to_string(n)};
    if (lhs > rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"a", detail::param(a)}, {"l", detail::param(l)}, {"n", detail::param(n)}},
            Rational(lhs), ">", Rational(rhs)));
    return report;
}

// Every m >= 3 lands in exactly one of two shapes relative to the modulus
// 2a+1, and the peak index has a closed form in each:
//   M3 : m = (2a+1)k + 3                        with r_a = ak + 2
//   GEN: m = (2a+1)k + 2n + eps, n in [2, a+1], eps in {0,1}, r_a = ak + n
enum class ResidueCase { M3, GEN };

struct ResidueInfo {
    long a = 0;
    long m = 0;
    long k = 0;
    ResidueCase case_tag = ResidueCase::M3;
    std::optional<long> n;
    std::optional<long> epsilon;
    long peak_index = 0;
};

inline std::string to_string(ResidueCase c) { return c == ResidueCase::M3 ? "M3" : "GEN"; }

inline ResidueInfo residue_decompose(long m, long a) {
    if (a < 1) throw std::invalid_argument("residue_decompose: a must be >= 1");
    if (m < 3) throw std::invalid_argument("residue_decompose: m must be >= 3");
    const long mod = 2 * a + 1;
    ResidueInfo info;
    info.a = a;
    info.m = m;
    if (m % mod == 3 % mod) {
        info.case_tag = ResidueCase::M3;
        info.k = (m - 3) / mod;
        info.peak_index = a * info.k + 2;
    } else {
        // unique k with offset s = m - (2a+1)k in [4, 2a+3]; s != 3 here
        long s = m % mod;
        long k = m / mod;
        while (s < 4) {
            s += mod;
            k -= 1;
        }
        info.case_tag = ResidueCase::GEN;
        info.k = k;
        info.n = s / 2;
        info.epsilon = s % 2;
        info.peak_index = a * k + *info.n;
    }
    if (info.k < 0)
        throw identity_violation("residue_decompose: negative block index for m=" +
                                 std::to_string(m) + " a=" + std::to_string(a));
    // reconstruct m and cross-check the closed-form peak index
    long rebuilt = info.case_tag == ResidueCase::M3
                       ? mod * info.k + 3
                       : mod * info.k + 2 * *info.n + *info.epsilon;
    if (rebuilt != m)
        throw identity_violation("residue_decompose: reconstruction mismatch for m=" +
                                 std::to_string(m));
    if (info.peak_index != predicted_peak(m, a))
        throw identity_violation("residue_decompose: closed-form peak index disagrees with "
                                 "predicted_peak at m=" + std::to_string(m) +
                                 " a=" + std::to_string(a));
    return info;
}

// Structural facts used to propagate the fall inequality across one block
// I_k = {(2a+1)k+3, ..., (2a+1)k+2a+3}, starting from the base element
// (2a+1)k+5 and moving by m -> m+2 (peak index must step up by one, and must
// stay <= floor((m-1)/2)) and by m -> m-1 (peak index must not move). The
// fall inequality itself is re-checked at every element of the block.
inline VerificationReport check_block_chain(long a, long k) {
    if (a < 1 || k < 0) throw std::invalid_argument("block chain: need a >= 1, k >= 0");
    const long mod = 2 * a + 1;
    VerificationReport report{"chain", "a=" + std::to_string(a) + " k=" + std::to_string(k)};
    auto fail = [&](const std::string& what, long m, const Rational& lhs,
                    const std::string& rel, const Rational& rhs) {
        report.record_fail(make_counterexample({{"a", detail::param(a)},
                                                {"k", detail::param(k)},
                                                {"step", what},
                                                {"m", detail::param(m)}},
                                               lhs, rel, rhs));
    };

    // upward steps m -> m+2 from offsets 5, 7, ..., 2a+1
    for (long off = 5; off + 2 <= mod + 2; off += 2) {
        long m = mod * k + off;
        long r_here = predicted_peak(m, a);
        long r_up = predicted_peak(m + 2, a);
        if (r_up == r_here + 1)
            report.record_pass();
        else
            fail("up:r(m+2)=r(m)+1", m, Rational(r_up), "==", Rational(r_here + 1));
        if (r_here <= (m - 1) / 2)
            report.record_pass();
        else
            fail("up:r(m)<=floor((m-1)/2)", m, Rational(r_here), "<=", Rational((m - 1) / 2));
    }

    // downward steps m -> m-1 from odd offsets 5, ..., 2a+3 and from offset 4
    std::vector<long> down_offsets;
    for (long off = 5; off <= mod + 2; off += 2) down_offsets.push_back(off);
    down_offsets.push_back(4);
    for (long off : down_offsets) {
        long m = mod * k + off;
        long r_here = predicted_peak(m, a);
        long r_down = predicted_peak(m - 1, a);
        if (r_down == r_here)
            report.record_pass();
        else
            fail("down:r(m-1)=r(m)", m, Rational(r_down), "==", Rational(r_here));
    }

    // the propagated inequality must hold at every element of the block
    for (long off = 3; off <= mod + 2; ++off) {
        long m = mod * k + off;
        VerificationReport step = check_peak_fall(m, a);
        if (step.passed) {
            report.record_pass();
        } else {
            const Counterexample& ce = step.counterexamples.front();
            fail("fall-at-element", m, Rational::parse(ce.lhs), ">", Rational::parse(ce.rhs));
        }
    }
    return report;
}

} // namespace wbs
