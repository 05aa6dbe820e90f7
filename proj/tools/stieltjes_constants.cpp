// Derivation tool for the frozen numeric constants: the first two limit constants
// of the zeta Laurent expansion at its pole, log-weighted zeta values, and the
// order-three-pole main-term coefficients, all via Euler-Maclaurin summation at
// 95-digit working precision with exact-rational Bernoulli numbers and exact-
// rational derivative bookkeeping.
//
// `--header` emits include/cuspsum/constants.hpp; the committed header is diffed
// against a fresh run by the test suite, so the literals cannot drift from this
// derivation. Without flags the tool prints a reference table (the source of the
// frozen oracle values in the tests).
//
// Build: g++ -O2 -std=c++20 stieltjes_constants.cpp -lmpfr -lgmpxx -lgmp

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

using F = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<95>>;

static F to_f(const mpq_class& q) {
    return F(q.get_num().get_str()) / F(q.get_den().get_str());
}

// B_0 .. B_{count-1} via the Pascal-row recursion sum_{k<=m} C(m+1,k) B_k = 0.
static std::vector<mpq_class> bernoulli(unsigned count) {
    std::vector<mpq_class> b(count);
    b[0] = 1;
    for (unsigned m = 1; m < count; ++m) {
        mpq_class s(0);
        for (unsigned k = 0; k < m; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
            s += mpq_class(c) * b[k];
        }
        b[m] = -s / (m + 1);
        b[m].canonicalize();
    }
    return b;
}

// (c0 + c1 L + c2 L^2) x^{-a} with exact rational coefficients; differentiation is
// c_i <- (i+1) c_{i+1} - a c_i, a <- a+1.
struct DerivPoly {
    std::vector<mpq_class> c;
    mpq_class a;

    DerivPoly(unsigned r, const mpq_class& s) : c(3, mpq_class(0)), a(s) { c[r] = 1; }

    void differentiate() {
        std::vector<mpq_class> n(3, mpq_class(0));
        for (int i = 0; i < 3; ++i) {
            if (i < 2) n[i] += (i + 1) * c[i + 1];
            n[i] -= a * c[i];
        }
        c = n;
        a += 1;
    }

    F eval(const F& K, const F& lnK) const {
        F poly = to_f(c[0]) + to_f(c[1]) * lnK + to_f(c[2]) * lnK * lnK;
        return poly * exp(-to_f(a) * lnK);
    }
};

// -f(K)/2 - sum_{j<=J} B_{2j}/(2j)! f^{(2j-1)}(K) for f(x) = ln^r x * x^{-s}.
static F em_correction(unsigned r, const mpq_class& s, unsigned long K, unsigned J,
                       const std::vector<mpq_class>& bern) {
    F Kf(K), lnK = log(Kf);
    DerivPoly d(r, s);
    F corr = -d.eval(Kf, lnK) / 2;
    mpq_class fact(1);
    for (unsigned j = 1; j <= J; ++j) {
        d.differentiate();
        if (j > 1) d.differentiate(); // order 2j-3 -> 2j-1; first pass starts at 0
        fact *= (2 * j - 1) * (2 * j);
        corr -= to_f(bern[2 * j] / fact) * d.eval(Kf, lnK);
    }
    return corr;
}

// sum_{n>=1} ln^r n * n^{-s}, s > 1: direct part + tail integral + correction.
static F log_moment_sum(unsigned r, const mpq_class& s, unsigned long K, unsigned J,
                        const std::vector<mpq_class>& bern) {
    F direct = 0;
    for (unsigned long n = K; n >= 1; --n) {
        F lnn = log(F(n));
        F term = exp(-to_f(s) * lnn);
        for (unsigned i = 0; i < r; ++i) term *= lnn;
        direct += term;
        if (n == 1) break;
    }
    F Kf(K), lnK = log(Kf);
    F sm1 = to_f(s - 1);
    F integral = exp((F(1) - to_f(s)) * lnK) / sm1; // I_0
    for (unsigned j = 1; j <= r; ++j)
        integral = exp((F(1) - to_f(s)) * lnK) * pow(lnK, (int)j) / sm1 +
                   F(j) / sm1 * integral;
    return direct + integral + em_correction(r, s, K, J, bern);
}

// Limit of sum_{k<=K} ln^r k / k minus its integral; r = 0 gives the leading
// constant, r = 1 the next one.
static F laurent_limit_constant(unsigned r, unsigned long K, unsigned J,
                                const std::vector<mpq_class>& bern) {
    F direct = 0;
    for (unsigned long n = K; n >= 1; --n) {
        F lnn = log(F(n));
        F term = F(1) / F(n);
        for (unsigned i = 0; i < r; ++i) term *= lnn;
        direct += term;
        if (n == 1) break;
    }
    F lnK = log(F(K));
    F integral = pow(lnK, (int)(r + 1)) / F(r + 1); // int_1^K ln^r x / x
    return direct - integral + em_correction(r, mpq_class(1), K, J, bern);
}

int main(int argc, char** argv) {
    bool header = argc > 1 && std::strcmp(argv[1], "--header") == 0;
    const unsigned long K = 200;
    const unsigned J = 18;
    auto bern = bernoulli(2 * J + 2);

    F g0 = laurent_limit_constant(0, K, J, bern);
    F g1 = laurent_limit_constant(1, K, J, bern);

    auto zeta = [&](const mpq_class& s) { return log_moment_sum(0, s, K, J, bern); };
    auto zeta_p = [&](const mpq_class& s) { return -log_moment_sum(1, s, K, J, bern); };
    auto zeta_pp = [&](const mpq_class& s) { return log_moment_sum(2, s, K, J, bern); };

    F z2 = zeta(2), zp2 = zeta_p(2), zpp2 = zeta_pp(2);
    F h0 = 1 / z2;
    F u = 2 * zp2 / z2;
    F v = 2 * zpp2 / z2;
    F h1 = -h0 * (1 + u);
    F h2 = h0 * (1 + u + u * u - v);
    F b1 = h0 / 2;
    F b2 = 3 * g0 * h0 + h1;
    F b3 = (3 * g0 * g0 - 3 * g1) * h0 + 3 * g0 * h1 + h2;

    auto str = [](const F& x, unsigned digits = 30) { return x.str(digits); };

    if (header) {
        std::printf("#pragma once\n");
        std::printf(
            "// Generated by tools/stieltjes_constants (Euler-Maclaurin, 95-digit working\n"
            "// precision, exact-rational Bernoulli numbers). Do not edit by hand: the test\n"
            "// suite regenerates this header and diffs it against the committed copy.\n\n");
        std::printf("namespace cuspsum {\n\n");
        std::printf("// Leading limit constants of the zeta Laurent expansion at the pole.\n");
        std::printf("inline constexpr long double stieltjes_gamma0 = %sL;\n", str(g0, 36).c_str());
        std::printf("inline constexpr long double stieltjes_gamma1 = %sL;\n", str(g1, 36).c_str());
        std::printf("\n} // namespace cuspsum\n");
        return 0;
    }

    std::printf("gamma0      %s\n", str(g0).c_str());
    std::printf("gamma1      %s\n", str(g1).c_str());
    std::printf("zeta(3/2)   %s\n", str(zeta(mpq_class(3, 2))).c_str());
    std::printf("zeta(2)     %s\n", str(z2).c_str());
    std::printf("zeta(12/5)  %s\n", str(zeta(mpq_class(12, 5))).c_str());
    std::printf("zeta(3)     %s\n", str(zeta(3)).c_str());
    std::printf("zeta(4)     %s\n", str(zeta(4)).c_str());
    std::printf("zeta(5)     %s\n", str(zeta(5)).c_str());
    std::printf("zeta(6)     %s\n", str(zeta(6)).c_str());
    std::printf("zeta(10)    %s\n", str(zeta(10)).c_str());
    std::printf("zeta'(2)    %s\n", str(zp2).c_str());
    std::printf("zeta''(2)   %s\n", str(zpp2).c_str());
    std::printf("zeta'(3/2)  %s\n", str(zeta_p(mpq_class(3, 2))).c_str());
    std::printf("B1          %s\n", str(b1).c_str());
    std::printf("B2          %s\n", str(b2).c_str());
    std::printf("B3          %s\n", str(b3).c_str());
    return 0;
}
