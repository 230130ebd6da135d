#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wbs/bigfloat.hpp"
#include "wbs/binom.hpp"
#include "wbs/errors.hpp"
#include "wbs/rational.hpp"
#include "wbs/report.hpp"

namespace wbs {

// The peak value f(m, a, r_a) scaled by sqrt(m)((1+a)/(1+2a))^m converges to
//
//   (1+a)^(1/2) (1+2a) / (a^(3/2) sqrt(2 pi))
//
// as m grows. Everything here stays exact rational up to the final sqrt(m)
// multiplication and rounding, which removes any cancellation concern: the
// huge ratio f * ((1+a)/(1+2a))^m is carried as one big rational.

// Exact two-sided bounds on the peak value, valid for m > 6(a+1):
//
//   (1 - d/((1+a)(1+r_a))) (a/(1+a))^(r_a-1) C(m, r_a)
//        < f(m, a, r_a) <
//   (a/(1+a))^(r_a-1) C(m, r_a),
//
// where d = (1+2a) r_a - am + a + 1.
inline std::pair<Rational, Rational> peak_bounds(long m, long a) {
    if (a < 1) throw scope_error("peak_bounds: requires integer a >= 1");
    if (m <= 6 * (a + 1))
        throw scope_error("peak_bounds: requires m > 6(a+1) = " + std::to_string(6 * (a + 1)));
    long r = predicted_peak(m, a);
    Rational ratio = Rational(a, a + 1).pow(r - 1);
    Rational upper = ratio * Rational(binomial(m, r));
    // d is bounded by 2a+3 (see offset_range_check), so it fits a long
    long d = static_cast<long>((1 + 2 * static_cast<long long>(a)) * r -
                               static_cast<long long>(a) * m + a + 1);
    Rational shrink = Rational(1) - Rational(Integer(d), Integer(a + 1) * (r + 1));
    return {shrink * upper, upper};
}

// Strict two-sided sandwich: lower < f(m, a, r_a) < upper, exact.
inline VerificationReport check_peak_sandwich(long m, long a) {
    auto [lower, upper] = peak_bounds(m, a);
    Rational f = f_value(m, Rational(a), predicted_peak(m, a));
    VerificationReport report{"prop51", "m=" + std::to_string(m) + " a=" + std::to_string(a)};
    if (lower < f)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"m", std::to_string(m)}, {"a", std::to_string(a)}, {"side", "lower"}}, lower, "<",
            f));
    if (f < upper)
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"m", std::to_string(m)}, {"a", std::to_string(a)}, {"side", "upper"}}, f, "<",
            upper));
    return report;
}

// The peak-index offset d = (1+2a) r_a - am + a + 1 always lands in (2, 2a+3].
inline VerificationReport offset_range_check(long m, long a) {
    if (a < 1) throw std::invalid_argument("offset_range_check: a must be >= 1");
    if (m < 2) throw std::invalid_argument("offset_range_check: m must be >= 2");
    long r = predicted_peak(m, a);
    long long d = (1 + 2 * static_cast<long long>(a)) * r - static_cast<long long>(a) * m + a + 1;
    VerificationReport report{"offset-range",
                              "m=" + std::to_string(m) + " a=" + std::to_string(a)};
    if (d > 2 && d <= 2 * a + 3)
        report.record_pass();
    else
        report.record_fail(Counterexample{
            {{"m", std::to_string(m)}, {"a", std::to_string(a)}},
            std::to_string(d), "in", "(2, " + std::to_string(2 * a + 3) + "]"});
    return report;
}

// The exact rational part of the scaled peak value,
// f(m, a, r_a) * ((1+a)/(1+2a))^m. Independent of any float precision.
inline Rational scaled_peak_exact_factor(long m, long a) {
    if (a < 1) throw scope_error("scaled_peak_exact_factor: requires integer a >= 1");
    long r = predicted_peak(m, a);
    return f_value(m, Rational(a), r) * Rational(a + 1, 2 * a + 1).pow(m);
}

// f(m, a, r_a) * sqrt(m) * ((1+a)/(1+2a))^m; the only approximate steps are
// sqrt(m) and the final rounding.
inline BigFloat scaled_peak_value(long m, long a, mpfr_prec_t precision = kDefaultPrecision) {
    Rational exact = scaled_peak_exact_factor(m, a);
    BigFloat sqrt_m = BigFloat::from_long(m, precision).sqrt();
    return BigFloat::from_rational(exact, precision) * sqrt_m;
}

// The limit constant (1+a)^(1/2) (1+2a) / (a^(3/2) sqrt(2 pi)), with
// correctly rounded sqrt and pi at the requested precision.
inline BigFloat limit_constant(long a, mpfr_prec_t precision = kDefaultPrecision) {
    if (a < 1) throw scope_error("limit_constant: requires integer a >= 1");
    BigFloat fa = BigFloat::from_long(a, precision);
    BigFloat num = BigFloat::from_long(a + 1, precision).sqrt() *
                   BigFloat::from_long(2 * a + 1, precision);
    BigFloat two_pi = BigFloat::from_long(2, precision) * BigFloat::pi(precision);
    BigFloat den = fa * fa.sqrt() * two_pi.sqrt();
    return num / den;
}

struct ConvergenceRow {
    long m;
    BigFloat scaled;
    BigFloat limit;
    BigFloat rel_err; // |scaled/limit - 1|
};

// One row per scheduled m. Convergence is cleanest when the whole schedule
// sits in a single residue class mod 2a+1, so the peak-offset pattern stays
// fixed along the schedule.
inline std::vector<ConvergenceRow> convergence_table(long a, const std::vector<long>& m_schedule,
                                                     mpfr_prec_t precision = kDefaultPrecision) {
    if (a < 1) throw scope_error("convergence_table: requires integer a >= 1");
    long prev = 1;
    for (long m : m_schedule) {
        if (m < 2) throw std::invalid_argument("convergence_table: every m must be >= 2");
        if (m < prev) throw std::invalid_argument("convergence_table: schedule must ascend");
        prev = m;
    }
    BigFloat limit = limit_constant(a, precision);
    BigFloat one = BigFloat::from_long(1, precision);
    std::vector<ConvergenceRow> rows;
    rows.reserve(m_schedule.size());
    for (long m : m_schedule) {
        BigFloat scaled = scaled_peak_value(m, a, precision);
        BigFloat rel = (scaled / limit - one).abs();
        rows.push_back({m, std::move(scaled), limit, std::move(rel)});
    }
    return rows;
}

} // namespace wbs
