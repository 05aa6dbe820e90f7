#pragma once
// Exact rational exponent calculus for the remainder bound: the admissible-c
// window, the beta exponent, the dominance inequalities (all verdicts strict, no
// floating point), and the two-branch evaluation of the bound itself, either
// numerically or as an exact x-power.

#include "cuspsum/numeric.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace cuspsum {

struct ExponentParams {
    Rational alpha{0};                 // coefficient-growth exponent, 0 <= alpha < 1
    Rational c{0};                     // window bound: kappa ranges over [1, x^c]
    std::optional<Rational> kappa_exp; // kappa as an exact x-power for bound evaluation
};

namespace detail {

inline void require_alpha(const Rational& alpha, const char* who) {
    if (alpha < 0 || alpha >= 1)
        throw std::domain_error(std::string(who) + ": requires 0 <= alpha < 1");
}

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace detail

// Largest admissible window exponent: min((3+6a)/(2+20a), 1-a).
inline Rational c_max(const Rational& alpha) {
    detail::require_alpha(alpha, "c_max");
    Rational first = Rational(3 + 6 * alpha) / Rational(2 + 20 * alpha);
    Rational second = 1 - alpha;
    return detail::rational_min(first, second);
}

// beta = c/(2-2a) + 1/2; strictly below 1 exactly when c < 1-a, so that bound is a
// precondition rather than a clamp.
inline Rational beta_of(const Rational& alpha, const Rational& c) {
    detail::require_alpha(alpha, "beta_of");
    if (c <= 0) throw std::domain_error("beta_of: requires c > 0");
    if (c >= 1 - alpha)
        throw std::domain_error("beta_of: requires c < 1 - alpha (beta would reach 1)");
    return Rational(c / (2 - 2 * alpha) + Rational(1, 2));
}

struct DominanceReport {
    bool scaled_c_below_half = false; // (1+10a)/(3+6a) * c < 1/2
    bool growth_below_one = false;    // (3+6a)/5 < 1
    bool c_below_complement = false;  // c < 1 - a
    bool c_admissible = false;        // c < c_max(a)
    bool window_equivalence = false;  // c_admissible == (scaled_c_below_half && c_below_complement)
};

// Every verdict is an exact strict comparison; boundary cases report false.
inline DominanceReport dominance_check(const Rational& alpha, const Rational& c) {
    detail::require_alpha(alpha, "dominance_check");
    if (c <= 0) throw std::domain_error("dominance_check: requires c > 0");
    DominanceReport r;
    r.scaled_c_below_half = Rational(1 + 10 * alpha) * c / Rational(3 + 6 * alpha) < Rational(1, 2);
    r.growth_below_one = Rational(3 + 6 * alpha) < 5;
    r.c_below_complement = c < 1 - alpha;
    r.c_admissible = c < c_max(alpha);
    r.window_equivalence = r.c_admissible == (r.scaled_c_below_half && r.c_below_complement);
    return r;
}

enum class MinBranch { first, second };

inline const char* to_string(MinBranch b) { return b == MinBranch::first ? "first" : "second"; }

struct RBoundValue {
    Real value = 0;
    MinBranch branch = MinBranch::first;
};

// kappa^{1/(2-2a)} sqrt(x) + min(kappa^{(1+10a)/(3+6a)} sqrt(x) + x^{(3+6a)/5},
// x^{1+2a}/kappa), evaluated numerically; ties keep the first branch.
inline RBoundValue r_bound(Real x, Real kappa, const Rational& alpha) {
    detail::require_alpha(alpha, "r_bound");
    if (!(x > 1.0L)) throw std::domain_error("r_bound: requires x > 1");
    if (!(kappa > 0.0L)) throw std::domain_error("r_bound: requires kappa > 0");
    Real a = to_real(alpha);
    Real rx = std::sqrt(x);
    Real lead = std::pow(kappa, 1.0L / (2.0L - 2.0L * a)) * rx;
    Real arm_first = std::pow(kappa, (1.0L + 10.0L * a) / (3.0L + 6.0L * a)) * rx +
                     std::pow(x, (3.0L + 6.0L * a) / 5.0L);
    Real arm_second = std::pow(x, 1.0L + 2.0L * a) / kappa;
    RBoundValue r;
    r.branch = arm_first <= arm_second ? MinBranch::first : MinBranch::second;
    r.value = lead + std::min(arm_first, arm_second);
    return r;
}

struct RBoundExponent {
    Rational exponent; // log_x of the bound
    Real value = 0;    // x^exponent
    MinBranch branch = MinBranch::first;
};

// Same bound with kappa = x^k for exact rational k: all comparisons happen on the
// exponents, so log_x of the result is an exact rational. Each min arm collapses
// to its dominant power first; sums of distinct powers would smear log_x by far
// more than floating error.
inline RBoundExponent r_bound(Real x, const ExponentParams& p) {
    if (!p.kappa_exp)
        throw std::invalid_argument("r_bound: params carry no kappa exponent");
    detail::require_alpha(p.alpha, "r_bound");
    if (!(x > 1.0L)) throw std::domain_error("r_bound: requires x > 1");
    const Rational& k = *p.kappa_exp;
    const Rational& a = p.alpha;
    Rational lead = k / (2 - 2 * a) + Rational(1, 2);
    Rational arm_first = detail::rational_max(
        Rational(k * Rational(1 + 10 * a) / Rational(3 + 6 * a) + Rational(1, 2)),
        Rational(Rational(3 + 6 * a) / 5));
    Rational arm_second = 1 + 2 * a - k;
    RBoundExponent r;
    r.branch = arm_first <= arm_second ? MinBranch::first : MinBranch::second;
    r.exponent = detail::rational_max(lead, detail::rational_min(arm_first, arm_second));
    r.value = std::pow(x, to_real(r.exponent));
    return r;
}

} // namespace cuspsum
