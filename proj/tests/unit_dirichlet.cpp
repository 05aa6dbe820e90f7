#include "cuspsum/constants.hpp"
#include "cuspsum/dirichlet.hpp"
#include "cuspsum/main_term.hpp"
#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"
#include "cuspsum/summatory.hpp"
#include "cuspsum/tau.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace cuspsum;

namespace {
const SieveTables& shared_tables() {
    static SieveTables t = build_sieves(100000);
    return t;
}
Real rel_gap(Real got, Real want) { return std::fabs(got - want) / std::fabs(want); }
} // namespace

TEST_CASE("exact Bernoulli numbers", "[dirichlet]") {
    auto b = bernoulli_numbers(13);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("tail-corrected series evaluation hits reference zeta values", "[dirichlet]") {
    CHECK(rel_gap(zeta_real(2.0L), oracles::zeta_2) < 5e-16L);
    CHECK(rel_gap(zeta_real(3.0L), oracles::zeta_3) < 5e-16L);
    CHECK(rel_gap(zeta_real(4.0L), oracles::zeta_4) < 5e-16L);
    CHECK(rel_gap(zeta_real(6.0L), oracles::zeta_6) < 5e-16L);
    CHECK(rel_gap(zeta_real(10.0L), oracles::zeta_10) < 5e-16L);
    CHECK(rel_gap(zeta_real(1.5L), oracles::zeta_3_over_2) < 5e-16L);
    CHECK(rel_gap(zeta_real(2.4L), oracles::zeta_12_over_5) < 5e-16L);
    CHECK_THROWS_AS(zeta_real(1.0L), std::domain_error);
    CHECK_THROWS_AS(log_moment_sum(1, 0.5L), std::domain_error);
}

TEST_CASE("log-weighted series match the derivative values", "[dirichlet]") {
    CHECK(rel_gap(zeta_prime(2.0L), oracles::zeta_prime_2) < 1e-14L);
    CHECK(rel_gap(zeta_prime(1.5L), oracles::zeta_prime_3_over_2) < 1e-14L);
    CHECK(rel_gap(zeta_second(2.0L), oracles::zeta_second_2) < 1e-14L);
    CHECK(std::fabs(zeta_prime_central(2.0L) - zeta_prime(2.0L)) < 1e-8L);
    CHECK(std::fabs(zeta_prime_central(1.5L) - zeta_prime(1.5L)) < 1e-8L);
}

TEST_CASE("generated constant header matches the reference digits", "[dirichlet]") {
    CHECK(rel_gap(stieltjes_gamma0, oracles::euler_gamma) < 1e-17L);
    CHECK(rel_gap(stieltjes_gamma1, oracles::gamma_one) < 1e-17L);
}

TEST_CASE("divisor-square series lands on its closed form", "[dirichlet]") {
    const auto& sv = shared_tables();
    auto c = dsquare_identity_check(sv, 2.0L, 100000);
    Real closed = 5.0L * std::acos(-1.0L) * std::acos(-1.0L) / 12.0L;
    CHECK(rel_gap(c.reference, closed) < 1e-15L);
    CHECK(c.abs_error < 5e-3L);
    CHECK(c.abs_error <= c.tail_bound);
    CHECK(c.pass);
    for (Real s : {1.5L, 3.0L, 5.0L}) {
        CAPTURE((double)s);
        CHECK(dsquare_identity_check(sv, s, 100000).pass);
    }
    CHECK_THROWS_AS(dsquare_identity_check(sv, 4.0L / 3.0L, 100), std::domain_error);
    CHECK_THROWS_AS(dsquare_identity_check(sv, 2.0L, sv.limit + 1), std::out_of_range);
}

TEST_CASE("local factor products converge to the partial sums", "[dirichlet]") {
    const auto& sv = shared_tables();
    auto tau = tau_table(50000);
    auto c = euler_product_check(tau, 12, 8.0L, 2, 50000, sv);
    CHECK(c.pass);
    CHECK(c.abs_error < 1e-6L);

    auto d = hecke_expand(divisor_system(sv, 20000), 20000, sv);
    auto cd = euler_product_check(d, 1, 3.0L, 97, 20000, sv);
    CHECK(cd.pass);

    CHECK_THROWS_AS(euler_product_check(tau, 12, 7.5L, 2, 100, sv), std::domain_error);
    CHECK_THROWS_AS(euler_product_check(tau, 0, 8.0L, 2, 100, sv), std::invalid_argument);
}

TEST_CASE("series partial sums accumulate ascending", "[dirichlet]") {
    const auto& sv = shared_tables();
    auto d = hecke_expand(divisor_system(sv, 100), 100, sv);
    Real direct = 0;
    for (uint64_t n = 1; n <= 100; ++n)
        direct += (Real)sv.divisors[n] * std::pow((Real)n, -3.0L);
    CHECK(std::fabs(dirichlet_partial(d, 3.0L, 100) - direct) < 1e-15L);
    CHECK_THROWS_AS(dirichlet_partial(d, 3.0L, 101), std::out_of_range);
}

TEST_CASE("cubic-pole residue coefficients", "[dirichlet]") {
    auto poly = main_term_poly();
    Real pi = std::acos(-1.0L);
    CHECK(std::fabs(poly.b1 - 3.0L / (pi * pi)) < 1e-13L);
    CHECK(rel_gap(poly.b1, oracles::main_b1) < 1e-14L);
    CHECK(rel_gap(poly.b2, oracles::main_b2) < 1e-13L);
    CHECK(rel_gap(poly.b3, oracles::main_b3) < 1e-11L);
    CHECK(main_term_value(poly, 100.0L) > 0);
    CHECK_THROWS_AS(main_term_value(poly, 0.0L), std::domain_error);
}

TEST_CASE("leading coefficient recovery from quadratic data", "[dirichlet]") {
    std::vector<std::pair<Real, Real>> pts;
    for (Real u : {2.0L, 3.5L, 5.0L, 7.25L})
        pts.emplace_back(u, 4.0L * u * u - 3.0L * u + 11.0L);
    CHECK(std::fabs(quadratic_leading_coefficient(pts) - 4.0L) < 1e-15L);
    pts.resize(2);
    CHECK_THROWS_AS(quadratic_leading_coefficient(pts), std::invalid_argument);
    std::vector<std::pair<Real, Real>> bad{{1.0L, 0.0L}, {1.0L, 1.0L}, {2.0L, 2.0L}};
    CHECK_THROWS_AS(quadratic_leading_coefficient(bad), std::invalid_argument);
}

TEST_CASE("mean-square growth ratio reporting", "[dirichlet]") {
    const auto& sv = shared_tables();
    auto tables = build_summatory(divisor_system(sv, 5000), 5000, sv);
    auto r = rankin_constant(tables, {500, 1000, 2000, 4000, 5000});
    REQUIRE(r.points.size() == 5);
    CHECK(r.positive);
    CHECK(r.estimate == r.points.back().second);
    CHECK(r.max_spread >= 0);
    CHECK_THROWS_AS(rankin_constant(tables, {}), std::invalid_argument);
}
