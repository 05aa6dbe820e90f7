#pragma once
// The slow-growth envelope eta(x) = (log x)^{3/5} (log log x)^{-1/5} and the fitted
// decay constant: the largest C such that |F(x)| <= x^scale exp(-C eta(x)) holds
// across a whole grid. Min-ratio rather than least squares: the claims being
// checked are upper bounds, so the certifiable number is the largest C that the
// grid still admits.

#include "cuspsum/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cuspsum {

inline Real eta_envelope(Real x) {
    constexpr Real e = 2.71828182845904523536L;
    if (!(x > e)) throw std::domain_error("eta_envelope: x must exceed e");
    Real lx = std::log(x);
    return std::pow(lx, 0.6L) * std::pow(std::log(lx), -0.2L);
}

struct EnvelopePoint {
    Real x = 0;
    Real abs_sum = 0;
    Real eta = 0;
    Real bound_ratio = 0; // |F(x)| / (x^scale exp(-C* eta(x))), <= 1 by construction
};

struct EnvelopeFit {
    Real fitted_constant = 0;
    Real exponent_scale = 1;
    size_t skipped_zero = 0;
    std::vector<EnvelopePoint> grid;
};

// sums holds (x, F(x)) with signed F; zero points cannot constrain the bound and
// are skipped but counted.
inline EnvelopeFit envelope_fit(const std::vector<std::pair<Real, Real>>& sums,
                                Real scale_exponent) {
    EnvelopeFit fit;
    fit.exponent_scale = scale_exponent;
    fit.grid.reserve(sums.size());
    bool any = false;
    Real cstar = 0;
    for (auto [x, F] : sums) {
        EnvelopePoint p;
        p.x = x;
        p.eta = eta_envelope(x); // throws on x <= e before any state is recorded
        p.abs_sum = std::fabs(F);
        fit.grid.push_back(p);
        if (F == 0) {
            ++fit.skipped_zero;
            continue;
        }
        Real c = -(std::log(p.abs_sum) - scale_exponent * std::log(x)) / p.eta;
        if (!any || c < cstar) cstar = c;
        any = true;
    }
    if (!any) throw std::domain_error("envelope_fit: every grid sum is zero, nothing to fit");
    fit.fitted_constant = cstar + 0.0L; // normalizes -0
    for (auto& p : fit.grid) {
        if (p.abs_sum == 0) continue;
        p.bound_ratio = std::exp(std::log(p.abs_sum) - scale_exponent * std::log(p.x) +
                                 cstar * p.eta);
    }
    return fit;
}

} // namespace cuspsum
