#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbs/rational.hpp"

namespace wbs {

// One failed comparison inside a sweep. Both sides are kept as exact strings
// (canonical fraction form for rationals, coefficient form for polynomials)
// so a failure can be re-checked by hand.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string relation; // the relation that was *expected* to hold
    std::string rhs;
};

// Outcome of an inequality/identity sweep. passed == counterexamples.empty().
struct VerificationReport {
    std::string check_id;
    std::string domain;
    bool passed = true;
    long instances = 0;
    std::vector<Counterexample> counterexamples;

    VerificationReport() = default;
    VerificationReport(std::string id, std::string dom)
        : check_id(std::move(id)), domain(std::move(dom)) {}

    void record_pass() { ++instances; }
    void record_fail(Counterexample ce) {
        ++instances;
        passed = false;
        counterexamples.push_back(std::move(ce));
    }
    void merge(const VerificationReport& other) {
        instances += other.instances;
        if (!other.passed) {
            passed = false;
            counterexamples.insert(counterexamples.end(),
                                   other.counterexamples.begin(),
                                   other.counterexamples.end());
        }
    }
};

inline Counterexample make_counterexample(
    std::vector<std::pair<std::string, std::string>> params,
    const Rational& lhs, const std::string& relation, const Rational& rhs) {
    return Counterexample{std::move(params), lhs.to_fraction_string(), relation,
                          rhs.to_fraction_string()};
}

// Result of a structural scan over one sequence (log-concavity, unimodality).
// holds == !first_violation; lhs/rhs carry the violated comparison.
struct ConcavityReport {
    bool holds = true;
    std::optional<long> first_violation;
    Rational lhs;
    Rational rhs;
};

} // namespace wbs
