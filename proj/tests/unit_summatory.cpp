#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"
#include "cuspsum/summatory.hpp"
#include "cuspsum/tau.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cuspsum;

namespace {
const SieveTables& shared_tables() {
    static SieveTables t = build_sieves(20000);
    return t;
}
} // namespace

TEST_CASE("divisor-system summatory values match brute force", "[summatory]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(divisor_system(sv, 1000), 1000, sv);
    BigInt acc(0);
    for (uint64_t n = 1; n <= 1000; ++n) {
        acc += (unsigned long)oracles::naive_divisor_count_of_square(n);
        REQUIRE(tables.direct_square_sum(n) == acc);
    }
}

TEST_CASE("two-part split equals the direct sum at every point", "[summatory]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(divisor_system(sv, 3000), 3000, sv);
    for (uint64_t x = 1; x <= 3000; ++x) {
        auto r = hyperbola_decompose(tables, sv, x);
        REQUIRE(r.equal);
        REQUIRE(r.sigma1 + r.sigma2 == r.direct);
    }
}

TEST_CASE("pinned split values for the divisor system", "[summatory]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(divisor_system(sv, 100), 100, sv);
    auto r = hyperbola_decompose(tables, sv, 4);
    CHECK(r.sigma1 == 13);
    CHECK(r.sigma2 == -1);
    CHECK(r.direct == 12);
    CHECK(r.equal);
}

TEST_CASE("weighted split carries the power-weighted Moebius sums", "[summatory]") {
    const auto& sv = shared_tables();
    auto tau = tau_table(20000);
    auto tables = build_summatory(tau_prime_system(tau, sv), 20000, sv);
    CHECK(tables.weight_exponent == 11);

    auto r3 = hyperbola_decompose(tables, sv, 3);
    CHECK(r3.sigma1 == BigInt(64081));
    CHECK(r3.sigma2 == BigInt(-179195));
    CHECK(r3.direct == BigInt(-115114));
    REQUIRE(r3.equal);

    for (uint64_t x = 1; x <= 300; ++x)
        REQUIRE(hyperbola_decompose(tables, sv, x).equal);
    for (uint64_t x : {999ull, 9999ull, 20000ull})
        REQUIRE(hyperbola_decompose(tables, sv, x).equal);
}

TEST_CASE("floating systems reproduce the split within tolerance", "[summatory]") {
    const auto& sv = shared_tables();
    auto tau = tau_table(2000);
    auto tables = build_summatory(tau_normalized_system(tau, sv), 2000, sv);
    CHECK(tables.weight_exponent == 0);
    for (uint64_t x = 1; x <= 2000; ++x) {
        CAPTURE(x);
        REQUIRE(hyperbola_decompose(tables, sv, x).equal);
    }
}

TEST_CASE("second moments accumulate monotonically", "[summatory]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(random_system(sv, 2000, 11), 2000, sv);
    CHECK(tables.mean_square(1) == 1);
    for (uint64_t y = 2; y <= 2000; ++y)
        REQUIRE(tables.mean_square(y) >= tables.mean_square(y - 1));
}

TEST_CASE("summatory range guards", "[summatory]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(divisor_system(sv, 50), 50, sv);
    CHECK_THROWS_AS(tables.direct_square_sum(0), std::out_of_range);
    CHECK_THROWS_AS(tables.direct_square_sum(51), std::out_of_range);
    CHECK_THROWS_AS(tables.mean_square(51), std::out_of_range);
    CHECK_THROWS_AS(hyperbola_decompose(tables, sv, 51), std::out_of_range);
}
