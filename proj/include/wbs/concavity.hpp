#pragma once

#include <string>
#include <vector>

#include "wbs/errors.hpp"
#include "wbs/rational.hpp"
#include "wbs/report.hpp"

namespace wbs {

// A nonnegative sequence {x_k} is log-concave when x_k^2 >= x_{k-1} x_{k+1}
// for every interior k. Comparisons are weak throughout, matching the
// definition; zero entries are allowed.
inline ConcavityReport is_log_concave(const std::vector<Rational>& xs) {
    for (const Rational& x : xs)
        if (x.sign() < 0)
            throw std::invalid_argument("is_log_concave: entries must be >= 0");
    ConcavityReport report;
    for (long k = 1; k + 1 < static_cast<long>(xs.size()); ++k) {
        Rational lhs = xs[k] * xs[k];
        Rational rhs = xs[k - 1] * xs[k + 1];
        if (lhs < rhs) {
            report.holds = false;
            report.first_violation = k;
            report.lhs = lhs;
            report.rhs = rhs;
            return report;
        }
    }
    return report;
}

// Weak unimodality: nondecreasing up to some index, then nonincreasing.
// Plateaus are allowed anywhere.
inline ConcavityReport is_unimodal(const std::vector<Rational>& xs) {
    ConcavityReport report;
    long n = static_cast<long>(xs.size());
    long i = 0;
    while (i + 1 < n && xs[i] <= xs[i + 1]) ++i;
    while (i + 1 < n && xs[i] >= xs[i + 1]) ++i;
    if (i + 1 < n) {
        report.holds = false;
        report.first_violation = i;
        report.lhs = xs[i];
        report.rhs = xs[i + 1];
    }
    return report;
}

// Partial sums of a Hadamard (term-wise) product of two nonnegative
// log-concave sequences form a log-concave sequence. Precondition failures
// (an input that is not nonnegative log-concave) throw invalid_argument; a
// failure of the conclusion would falsify a proven statement and therefore
// throws identity_violation instead of being reported as an ordinary result.
inline ConcavityReport hadamard_partial_sum_check(const std::vector<Rational>& xs,
                                                  const std::vector<Rational>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("hadamard_partial_sum_check: length mismatch");
    if (!is_log_concave(xs).holds)
        throw std::invalid_argument("hadamard_partial_sum_check: xs is not log-concave");
    if (!is_log_concave(ys).holds)
        throw std::invalid_argument("hadamard_partial_sum_check: ys is not log-concave");

    std::vector<Rational> z;
    z.reserve(xs.size());
    Rational acc = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        acc += xs[i] * ys[i];
        z.push_back(acc);
    }
    ConcavityReport report = is_log_concave(z);
    if (!report.holds)
        throw identity_violation(
            "hadamard_partial_sum_check: partial sums of a Hadamard product of "
            "log-concave sequences came out non-log-concave at k=" +
            std::to_string(*report.first_violation) + " (" + report.lhs.to_fraction_string() +
            " < " + report.rhs.to_fraction_string() + ")");
    return report;
}

} // namespace wbs
