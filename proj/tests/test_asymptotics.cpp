#include <catch2/catch_amalgamated.hpp>

#include <mpfr.h>

#include "wbs/asymptotics.hpp"

using namespace wbs;

namespace {

// Independent route to 3/sqrt(pi) for the a = 1 constant.
BigFloat three_over_sqrt_pi(mpfr_prec_t prec) {
    return BigFloat::from_long(3, prec) / BigFloat::pi(prec).sqrt();
}

Rational rel_gap(const BigFloat& x, const BigFloat& y) {
    // |x/y - 1| computed exactly on the stored values
    Rational rx = x.to_rational(), ry = y.to_rational();
    return (rx / ry - Rational(1)).abs();
}

} // namespace

TEST_CASE("peak bounds at m=13, a=1 (frozen)") {
    auto [lower, upper] = peak_bounds(13, 1);
    CHECK(upper == Rational(1287, 16)); // (1/2)^4 C(13,5)
    CHECK(lower == Rational(429, 8));   // (1 - 4/12) * upper
    Rational f = f_value(13, Rational(1), predicted_peak(13, 1));
    CHECK(f == Rational(595, 8));
    CHECK(lower < f);
    CHECK(f < upper);
}

TEST_CASE("peak bounds scope") {
    CHECK_THROWS_AS(peak_bounds(10, 1), scope_error); // 10 <= 12
    CHECK_THROWS_AS(peak_bounds(12, 1), scope_error);
    CHECK_THROWS_AS(peak_bounds(18, 2), scope_error); // 18 <= 18
    CHECK_NOTHROW(peak_bounds(19, 2));
    CHECK_THROWS_AS(peak_bounds(100, 0), scope_error);
}

TEST_CASE("sandwich holds strictly on a small sweep") {
    for (long a = 1; a <= 4; ++a) {
        for (long m = 6 * (a + 1) + 1; m <= 80; ++m) {
            auto [lower, upper] = peak_bounds(m, a);
            Rational f = f_value(m, Rational(a), predicted_peak(m, a));
            CHECK(lower < f);
            CHECK(f < upper);
        }
    }
}

TEST_CASE("peak offset stays in (2, 2a+3]") {
    // d = (1+2a) r_a - am + a + 1; spot values 4, 5, 3
    CHECK(offset_range_check(7, 1).passed);
    CHECK(offset_range_check(12, 1).passed);
    CHECK(offset_range_check(5, 2).passed);
    for (long a = 1; a <= 5; ++a)
        for (long m = 2; m <= 200; ++m) CHECK(offset_range_check(m, a).passed);
}

TEST_CASE("scaled peak value: exact factor and float part") {
    // f(2,1,1) = 3/2, times (2/3)^2 = 2/3
    CHECK(scaled_peak_exact_factor(2, 1) == Rational(2, 3));
    BigFloat v = scaled_peak_value(2, 1);
    BigFloat want = BigFloat::from_rational(Rational(2, 3)) *
                    BigFloat::from_long(2).sqrt(); // same rounding route
    CHECK(v.to_rational() == want.to_rational());
    CHECK(v.to_double() == Catch::Approx(0.9428090415820634).epsilon(1e-14));

    // the rational factor is positive and independent of precision
    for (long m : {2L, 5L, 17L, 40L}) {
        Rational factor = scaled_peak_exact_factor(m, 1);
        CHECK(factor.sign() > 0);
    }
    Rational g64 = (scaled_peak_value(37, 2, 64)).to_rational();
    Rational g256 = (scaled_peak_value(37, 2, 256)).to_rational();
    CHECK((g64 / g256 - Rational(1)).abs() < Rational(1, 1000000000000L));
}

TEST_CASE("limit constant values") {
    // a = 1: the constant simplifies to 3/sqrt(pi)
    BigFloat c1 = limit_constant(1, 128);
    CHECK(rel_gap(c1, three_over_sqrt_pi(256)) < Rational(1) / Rational(10).pow(30));

    // a = 2: sqrt(3)*5 / (2 sqrt(2) sqrt(2 pi)), assembled independently
    mpfr_prec_t prec = 192;
    BigFloat want = BigFloat::from_long(3, prec).sqrt() * BigFloat::from_long(5, prec) /
                    (BigFloat::from_long(2, prec) * BigFloat::from_long(2, prec).sqrt() *
                     (BigFloat::from_long(2, prec) * BigFloat::pi(prec)).sqrt());
    CHECK(rel_gap(limit_constant(2, 128), want) < Rational(1) / Rational(10).pow(30));

    CHECK_THROWS_AS(limit_constant(0), scope_error);
}

TEST_CASE("limit constant approaches sqrt(2/pi) for large a") {
    mpfr_prec_t prec = 128;
    BigFloat ref = (BigFloat::from_long(2, prec) / BigFloat::pi(prec)).sqrt();
    CHECK(rel_gap(limit_constant(1000, prec), ref) < Rational(2, 1000));
    CHECK(rel_gap(limit_constant(1000000, prec), ref) < Rational(2, 1000000));
}

TEST_CASE("limit constant is stable under precision doubling") {
    Rational c128 = limit_constant(1, 128).to_rational();
    Rational c256 = limit_constant(1, 256).to_rational();
    // agreement at the 128-bit ulp scale
    CHECK((c128 / c256 - Rational(1)).abs() < Rational(1, Integer(1) << 120));
}

TEST_CASE("convergence table") {
    auto single = convergence_table(1, {50});
    REQUIRE(single.size() == 1);
    CHECK(single[0].m == 50);
    Rational expect_rel = (single[0].scaled.to_rational() / single[0].limit.to_rational() -
                           Rational(1))
                              .abs();
    // rel_err is computed in float; compare at float tolerance
    CHECK((single[0].rel_err.to_rational() - expect_rel).abs() < Rational(1, Integer(1) << 100));

    // one residue class mod 3, errors shrink along the schedule
    auto rows = convergence_table(1, {35, 71, 143});
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rel_err < rows[0].rel_err);
    CHECK(rows[2].rel_err < rows[1].rel_err);

    auto a3 = convergence_table(3, {700, 1400, 2800});
    REQUIRE(a3.size() == 3);
    for (const auto& row : a3) {
        CHECK(row.scaled > BigFloat::from_long(0));
        CHECK(row.rel_err < BigFloat::from_long(1));
    }

    CHECK_THROWS_AS(convergence_table(1, {50, 20}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_table(1, {1}), std::invalid_argument);
}

TEST_CASE("bigfloat conversion from rationals is correctly rounded") {
    // 1/3 at 8 significand bits rounds (ties-to-even) to 171/512
    BigFloat x = BigFloat::from_rational(Rational(1, 3), 8);
    CHECK(x.to_rational() == Rational(171, 512));
    // exact values pass through unchanged
    CHECK(BigFloat::from_rational(Rational(5, 4), 64).to_rational() == Rational(5, 4));
    CHECK(BigFloat::from_long(7).to_rational() == Rational(7));
}
