#include "cuspsum/exponents.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace cuspsum;

namespace {
// mpq_class comparisons assume canonical form, so reduce before comparing.
Rational qq(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
} // namespace

TEST_CASE("admissible window endpoints", "[exponents]") {
    CHECK(c_max(Rational(5, 28)) == qq(57, 78));
    CHECK(c_max(Rational(5, 28)) == Rational(19, 26)); // same value, canonical form
    CHECK(c_max(Rational(0)) == 1);
    CHECK(c_max(Rational(1, 4)) == Rational(9, 14));
    CHECK(c_max(Rational(9, 10)) == Rational(1, 10)); // complement branch binds
    CHECK_THROWS_AS(c_max(Rational(-1, 10)), std::domain_error);
    CHECK_THROWS_AS(c_max(Rational(1)), std::domain_error);
}

TEST_CASE("window size shrinks as the growth exponent rises", "[exponents]") {
    Rational prev = c_max(Rational(0));
    for (int i = 1; i < 100; ++i) {
        Rational cur = c_max(qq(i, 100));
        REQUIRE(cur < prev);
        prev = cur;
    }
}

TEST_CASE("window-to-range exponent map and its inverse", "[exponents]") {
    Rational alpha(5, 28);
    CHECK_THROWS_AS(beta_of(alpha, Rational(23, 28)), std::domain_error); // c = 1 - alpha exactly
    for (int k = 1; k <= 7; ++k) {
        Rational ck(Rational(k) * c_max(alpha) / 8);
        Rational beta = beta_of(alpha, ck);
        // Defining relation: beta - 1/2 = c / (2 - 2 alpha).
        REQUIRE(Rational((beta - Rational(1, 2)) * (2 - 2 * alpha)) == ck);
        REQUIRE(beta < 1);
        REQUIRE(beta > Rational(1, 2));
    }
    // beta stays below 1 exactly when c < 1 - alpha.
    for (int i = 0; i < 80; ++i) {
        Rational a = qq(i, 100);
        for (int j = 1; j <= 12; ++j) {
            Rational cq = qq(j, 10);
            if (cq >= 1 - a) {
                CHECK_THROWS_AS(beta_of(a, cq), std::domain_error);
            } else {
                CHECK(beta_of(a, cq) < 1);
            }
        }
    }
    CHECK_THROWS_AS(beta_of(Rational(0), Rational(0)), std::domain_error);
}

TEST_CASE("dominance flags are exact strict comparisons", "[exponents]") {
    auto r = dominance_check(Rational(1, 4), Rational(1, 2));
    CHECK(r.scaled_c_below_half);  // (1+10/4)(1/2)/(3+3/2) = 7/18 < 1/2
    CHECK(r.growth_below_one);     // (3+3/2)/5 = 9/10 < 1
    CHECK(r.c_below_complement);   // 1/2 < 3/4
    CHECK(r.c_admissible);         // 1/2 < 9/14
    CHECK(r.window_equivalence);

    auto s = dominance_check(Rational(1, 4), Rational(7, 10));
    CHECK_FALSE(s.scaled_c_below_half); // 49/90 > 1/2
    CHECK(s.c_below_complement);        // 7/10 < 3/4
    CHECK_FALSE(s.c_admissible);        // 7/10 > 9/14
    CHECK(s.window_equivalence);

    auto t = dominance_check(Rational(2, 5), Rational(1, 10));
    CHECK_FALSE(t.growth_below_one); // (3+12/5)/5 = 27/25 > 1
    CHECK(t.window_equivalence);

    // Boundary: c exactly at the window edge is not admissible.
    auto edge = dominance_check(Rational(0), Rational(1));
    CHECK_FALSE(edge.c_admissible);
    CHECK(edge.window_equivalence);

    CHECK_THROWS_AS(dominance_check(Rational(1, 4), Rational(0)), std::domain_error);
    CHECK_THROWS_AS(dominance_check(Rational(3, 2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("the window equivalence holds across a random rational grid", "[exponents]") {
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 1000; ++i) {
        Rational alpha = qq((long)(rng() % 97), 100);
        Rational c = qq((long)(rng() % 130) + 1, 100);
        CAPTURE(alpha.get_str(), c.get_str());
        REQUIRE(dominance_check(alpha, c).window_equivalence);
    }
}

TEST_CASE("numeric bound evaluation and branch selection", "[exponents]") {
    auto r1 = r_bound(1e4L, 1.0L, Rational(0));
    CHECK(std::fabs(r1.value - 451.18864315095801L) < 1e-9L);
    CHECK(r1.branch == MinBranch::first);

    auto r2 = r_bound(1e4L, 10.0L, Rational(0));
    CHECK(std::fabs(r2.value - 782.85987817098431L) < 1e-9L);
    CHECK(r2.branch == MinBranch::first);

    auto r3 = r_bound(100.0L, 1e6L, Rational(0));
    CHECK(r3.branch == MinBranch::second);
    CHECK(std::fabs(r3.value - 10000.0001L) < 1e-9L);

    CHECK_THROWS_AS(r_bound(1.0L, 1.0L, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(r_bound(10.0L, 0.0L, Rational(0)), std::domain_error);
    CHECK(std::string(to_string(MinBranch::second)) == "second");
}

TEST_CASE("exponent-mode bound collapses to an exact rational power", "[exponents]") {
    ExponentParams p;
    p.alpha = Rational(0);
    p.kappa_exp = Rational(1, 2);
    auto r = r_bound(1e6L, p);
    CHECK(r.exponent == Rational(3, 4));
    CHECK(r.branch == MinBranch::second); // arm 1+2a-k = 1/2 beats 2/3
    CHECK(std::fabs(std::log(r.value) / std::log(1e6L) - 0.75L) < 1e-6L);

    p.kappa_exp = Rational(2);
    auto r2 = r_bound(1e6L, p);
    CHECK(r2.exponent == Rational(3, 2)); // lead term dominates a negative arm

    ExponentParams no_kappa;
    no_kappa.alpha = Rational(0);
    CHECK_THROWS_AS(r_bound(1e6L, no_kappa), std::invalid_argument);
}

TEST_CASE("exponent mode sandwiches the numeric sum", "[exponents]") {
    // With kappa = x^k every numeric term is an exact power of x, so the sum of
    // the three positive pieces lies between x^e and 3 x^e for the reported e.
    for (auto [anum, aden, knum, kden] : {std::array<long, 4>{1, 10, 1, 3},
                                          std::array<long, 4>{5, 28, 1, 2},
                                          std::array<long, 4>{0, 1, 1, 4}}) {
        ExponentParams p;
        p.alpha = Rational(anum, aden);
        p.kappa_exp = Rational(knum, kden);
        Real x = 1e6L;
        auto power = r_bound(x, p);
        auto numeric = r_bound(x, std::pow(x, to_real(*p.kappa_exp)), p.alpha);
        CAPTURE(anum, aden, knum, kden);
        REQUIRE(numeric.value >= power.value * (1.0L - 1e-12L));
        REQUIRE(numeric.value <= 3.0L * power.value * (1.0L + 1e-12L));
    }
}
