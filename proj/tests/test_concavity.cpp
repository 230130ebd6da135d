#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "wbs/binom.hpp"
#include "wbs/concavity.hpp"

using namespace wbs;

namespace {
std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return xs; }
} // namespace

TEST_CASE("log-concavity scan") {
    CHECK(is_log_concave(rationals({1, 2, Rational(7, 4), 1})).holds);
    CHECK(is_log_concave(rationals({1, 1, 1})).holds);
    auto bad = is_log_concave(rationals({1, 1, 2}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.first_violation.has_value());
    CHECK(*bad.first_violation == 1);
    CHECK(bad.lhs == Rational(1));
    CHECK(bad.rhs == Rational(2));
    CHECK(is_log_concave(rationals({0, 1, 0})).holds); // zeros allowed
    CHECK(is_log_concave({}).holds);
    CHECK_THROWS_AS(is_log_concave(rationals({1, -1, 1})), std::invalid_argument);
}

TEST_CASE("unimodality scan") {
    CHECK(is_unimodal(rationals({1, 2, Rational(7, 4), 1})).holds);
    CHECK(is_unimodal(rationals({1, 1})).holds);
    CHECK(is_unimodal(rationals({1, 2, 2, 1})).holds);
    CHECK(is_unimodal(rationals({3, 2, 1})).holds);
    auto valley = is_unimodal(rationals({2, 1, 2}));
    CHECK_FALSE(valley.holds);
    REQUIRE(valley.first_violation.has_value());
    CHECK(*valley.first_violation == 1);
}

TEST_CASE("partial sums of Hadamard products stay log-concave") {
    // binomial row times geometric weights: the f-sequence numerators
    std::vector<Rational> xs, ys;
    for (long i = 0; i <= 6; ++i) {
        xs.emplace_back(binomial(6, i));
        ys.push_back(Rational(2).pow(i));
    }
    CHECK(hadamard_partial_sum_check(xs, ys).holds);

    std::vector<Rational> ones(8, Rational(1));
    CHECK(hadamard_partial_sum_check(ones, ones).holds);

    std::vector<Rational> geo3, geo_half;
    for (long i = 0; i < 9; ++i) {
        geo3.push_back(Rational(3).pow(i));
        geo_half.push_back(Rational(1, 2).pow(i));
    }
    CHECK(hadamard_partial_sum_check(geo3, geo_half).holds);
    // brute-force the same conclusion over every triple
    std::vector<Rational> z;
    Rational acc = 0;
    for (size_t i = 0; i < geo3.size(); ++i) {
        acc += geo3[i] * geo_half[i];
        z.push_back(acc);
    }
    for (size_t k = 1; k + 1 < z.size(); ++k) CHECK(z[k] * z[k] >= z[k - 1] * z[k + 1]);
}

TEST_CASE("hadamard check rejects non-log-concave inputs as precondition failures") {
    std::vector<Rational> good(4, Rational(1));
    CHECK_THROWS_AS(hadamard_partial_sum_check(rationals({1, 1, 2, 1}), good),
                    std::invalid_argument);
    CHECK_THROWS_AS(hadamard_partial_sum_check(good, rationals({1, 1, 2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(hadamard_partial_sum_check(good, rationals({1, 1})), std::invalid_argument);
}

TEST_CASE("f-sequences are log-concave and unimodal (small sweep)") {
    for (const Rational& a :
         {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3), Rational(5)}) {
        for (long m = 0; m <= 40; ++m) {
            auto seq = f_sequence(SeqSpec(m, a));
            CHECK(is_log_concave(seq.values).holds);
            CHECK(is_unimodal(seq.values).holds);
        }
    }
}

TEST_CASE("strong log-concavity is equivalent to log-concavity on positives") {
    // exhaustive pair checks on vectors of length <= 12
    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> num(1, 40), den(1, 8), len(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> xs;
        long n = len(rng);
        for (long i = 0; i < n; ++i) xs.emplace_back(num(rng), den(rng));
        CHECK(is_log_concave(xs).holds == oracle::strongly_log_concave(xs));
    }
    for (long m = 2; m <= 11; ++m) {
        auto seq = f_sequence(SeqSpec(m, Rational(2)));
        CHECK(is_log_concave(seq.values).holds == oracle::strongly_log_concave(seq.values));
    }
}
