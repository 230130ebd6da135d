#include <catch2/catch_amalgamated.hpp>

#include "wbs/rm_codes.hpp"

using namespace wbs;

TEST_CASE("parameter triples") {
    auto h = rm_params(1, 3); // extended Hamming [8,4,4]
    CHECK(h.n == 8);
    CHECK(h.k == 4);
    CHECK(h.d == 4);

    auto rep = rm_params(0, 5); // repetition [32,1,32]
    CHECK(rep.n == 32);
    CHECK(rep.k == 1);
    CHECK(rep.d == 32);

    auto full = rm_params(4, 4); // full space [16,16,1]
    CHECK(full.n == 16);
    CHECK(full.k == 16);
    CHECK(full.d == 1);

    CHECK_THROWS_AS(rm_params(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(rm_params(-1, 4), std::invalid_argument);
}

TEST_CASE("structural invariants d * 2^r = n = 2^m") {
    for (long m = 0; m <= 16; ++m)
        for (long r = 0; r <= m; ++r) {
            auto p = rm_params(r, m);
            Integer two_r;
            mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
            CHECK(p.d * two_r == p.n);
        }
}

TEST_CASE("kd/n equals the a=1 weighted sum value") {
    CHECK(rate_distance_product(1, 3) == Rational(2));
    CHECK(rate_distance_product(3, 7) == Rational(8)); // 64 * 16 / 128
    for (long m : {3L, 9L, 17L}) CHECK(rate_distance_product(0, m) == Rational(1));
    // dual-route identity across the grid (mismatch would throw)
    for (long m = 0; m <= 40; ++m)
        for (long r = 0; r <= m; ++r) CHECK_NOTHROW(rate_distance_product(r, m));
}

TEST_CASE("best r matches the peak formula off the exceptional set") {
    CHECK(best_r(7).tie_indices == std::vector<long>{3});
    CHECK(best_r(2).tie_indices == std::vector<long>{1});
    // m = 12 is exceptional: the true argmax sits one below the formula value
    auto twelve = best_r(12);
    CHECK(twelve.argmax_min == 4);
    CHECK(predicted_peak(12, 1) == 5);
    for (long m = 2; m <= 200; ++m) {
        if (is_exceptional_m(m, 1)) continue;
        CHECK(best_r(m).tie_indices == std::vector<long>{predicted_peak(m, 1)});
    }
}
