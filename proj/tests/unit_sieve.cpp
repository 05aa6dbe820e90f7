#include "cuspsum/sieve.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cuspsum;

namespace {
const SieveTables& shared_tables() {
    static SieveTables t = build_sieves(100000);
    return t;
}
} // namespace

TEST_CASE("factor tables match trial division", "[sieves]") {
    const auto& t = shared_tables();
    for (uint64_t n = 1; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK((int)t.mobius[n] == oracles::naive_mobius(n));
        CHECK(t.divisors[n] == oracles::naive_divisor_count(n));
    }
}

TEST_CASE("smallest prime factor decomposition reassembles n", "[sieves]") {
    const auto& t = shared_tables();
    for (uint64_t n = 2; n <= 5000; ++n) {
        uint64_t reassembled = t.rest[n];
        for (uint32_t e = 0; e < t.spf_exp[n]; ++e) reassembled *= t.spf[n];
        CHECK(reassembled == n);
        CHECK(t.rest[n] % t.spf[n] != 0);
    }
}

TEST_CASE("factorize returns sorted prime powers", "[sieves]") {
    const auto& t = shared_tables();
    auto f = factorize(t, 98000); // 2^4 * 5^3 * 7^2
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<uint32_t, uint32_t>{2, 4});
    CHECK(f[1] == std::pair<uint32_t, uint32_t>{5, 3});
    CHECK(f[2] == std::pair<uint32_t, uint32_t>{7, 2});
    CHECK(factorize(t, 1).empty());
}

TEST_CASE("divisor lists are complete and sorted", "[sieves]") {
    const auto& t = shared_tables();
    auto d = divisor_list(t, 60);
    CHECK(d == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
    for (uint64_t n : {1ull, 97ull, 1024ull, 99991ull})
        CHECK(divisor_list(t, n).size() == t.divisors[n]);
}

TEST_CASE("running Moebius sums match a direct accumulation", "[sieves]") {
    const auto& t = shared_tables();
    int64_t acc = 0;
    for (uint64_t n = 1; n <= 10000; ++n) {
        acc += t.mobius[n];
        REQUIRE(t.mertens[n] == acc);
    }
    CHECK(mertens(t, 10) == -1);
    CHECK(mertens(t, 10000) == -23);
}

TEST_CASE("windowed Moebius recomputation agrees with the table", "[sieves]") {
    const auto& t = shared_tables();
    CHECK(mertens_segmented(10000) == -23);
    CHECK(mertens_segmented(10) == -1);
    for (uint32_t segment : {64u, 1000u, 1u << 20})
        CHECK(mertens_segmented(33333, segment) == mertens(t, 33333));
    auto window = mobius_segment(99990, 100000);
    for (uint64_t n = 99990; n <= 100000; ++n)
        CHECK((int)window[n - 99990] == (int)t.mobius[n]);
    CHECK_THROWS_AS(mobius_segment(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(mertens_segmented(10, 0), std::invalid_argument);
}

TEST_CASE("divisor counts at square arguments", "[sieves]") {
    const auto& t = shared_tables();
    auto d2 = divisor_square_values(t, 1000);
    for (uint64_t n = 1; n <= 1000; ++n) {
        CAPTURE(n);
        CHECK(d2[n] == oracles::naive_divisor_count_of_square(n));
    }
    CHECK_THROWS_AS(divisor_square_values(t, t.limit + 1), std::out_of_range);
}

TEST_CASE("reciprocal Moebius sums are exact rationals", "[sieves]") {
    const auto& t = shared_tables();
    CHECK(mobius_reciprocal_sum(t, 3) == Rational(1, 6)); // 1 - 1/2 - 1/3
    CHECK(mobius_reciprocal_tail(t, 3) == Rational(-1, 6));
    Rational direct(0);
    for (uint64_t m = 1; m <= 500; ++m)
        if (t.mobius[m] != 0) direct += Rational(t.mobius[m], m);
    direct.canonicalize();
    CHECK(mobius_reciprocal_sum(t, 500) == direct);
    CHECK(std::fabs(to_real(mobius_reciprocal_tail(t, 10000))) < 0.01L);
    CHECK_THROWS_AS(mobius_reciprocal_sum(t, t.limit + 1), std::out_of_range);
}

TEST_CASE("sieve range guards", "[sieves]") {
    const auto& t = shared_tables();
    CHECK_THROWS_AS(factorize(t, t.limit + 1), std::out_of_range);
    CHECK_THROWS_AS(mertens(t, t.limit + 1), std::out_of_range);
    CHECK_THROWS_AS(build_sieves(0), std::invalid_argument);
}
