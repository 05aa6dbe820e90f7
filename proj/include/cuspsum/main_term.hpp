#pragma once
// Main term of the d(n^2) summatory function. The generating series is
// zeta(s)^3 / zeta(2s); the order-three pole at s = 1 of x^s/s times that series
// contributes x (b1 ln^2 x + b2 ln x + b3), with coefficients assembled from the
// zeta Laurent data at s = 1 and the value/derivatives of zeta at 2.

#include "cuspsum/constants.hpp"
#include "cuspsum/dirichlet.hpp"
#include "cuspsum/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cuspsum {

struct MainTermPoly {
    Real b1 = 0;
    Real b2 = 0;
    Real b3 = 0;
};

// With w = s - 1: zeta(s)^3 = w^{-3} (1 + 3 g0 w + (3 g0^2 - 3 g1) w^2 + ...),
// x^s/s = x (1 + (L-1) w + (L^2/2 - L + 1) w^2 + ...), and 1/zeta(2s) =
// h0 (1 - u w + (u^2 - v) w^2 + ...) where u = 2 zeta'(2)/zeta(2) and
// v = 2 zeta''(2)/zeta(2). The w^2 coefficient of the product is the residue.
inline MainTermPoly main_term_poly() {
    Real z2 = zeta_real(2.0L);
    Real h0 = 1.0L / z2;
    Real u = 2.0L * zeta_prime(2.0L) / z2;
    Real v = 2.0L * zeta_second(2.0L) / z2;
    Real h1 = -h0 * (1.0L + u);
    Real h2 = h0 * (1.0L + u + u * u - v);
    Real g0 = stieltjes_gamma0;
    Real g1 = stieltjes_gamma1;
    MainTermPoly p;
    p.b1 = h0 / 2.0L;
    p.b2 = 3.0L * g0 * h0 + h1;
    p.b3 = (3.0L * g0 * g0 - 3.0L * g1) * h0 + 3.0L * g0 * h1 + h2;
    return p;
}

inline Real main_term_value(const MainTermPoly& p, Real x) {
    if (!(x > 0.0L)) throw std::domain_error("main_term_value: x must be positive");
    Real L = std::log(x);
    return x * ((p.b1 * L + p.b2) * L + p.b3);
}

// Mean second divided difference over consecutive (t, y) triples; for data on a
// quadratic in t this is exactly the leading coefficient, so feeding it
// (ln x, F(x)/x) recovers b1 up to the lower-order drift.
inline Real quadratic_leading_coefficient(const std::vector<std::pair<Real, Real>>& pts) {
    if (pts.size() < 3)
        throw std::invalid_argument("quadratic_leading_coefficient: need at least 3 points");
    Real acc = 0.0L;
    size_t triples = pts.size() - 2;
    for (size_t i = 0; i < triples; ++i) {
        auto [t0, y0] = pts[i];
        auto [t1, y1] = pts[i + 1];
        auto [t2, y2] = pts[i + 2];
        if (!(t0 < t1 && t1 < t2))
            throw std::invalid_argument("quadratic_leading_coefficient: abscissae must increase");
        Real d01 = (y1 - y0) / (t1 - t0);
        Real d12 = (y2 - y1) / (t2 - t1);
        acc += (d12 - d01) / (t2 - t0);
    }
    return acc / (Real)triples;
}

} // namespace cuspsum
