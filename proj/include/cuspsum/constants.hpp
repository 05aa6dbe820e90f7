#pragma once
// Generated by tools/stieltjes_constants (Euler-Maclaurin, 95-digit working
// precision, exact-rational Bernoulli numbers). Do not edit by hand: the test
// suite regenerates this header and diffs it against the committed copy.

namespace cuspsum {

// Leading limit constants of the zeta Laurent expansion at the pole.
inline constexpr long double stieltjes_gamma0 = 0.577215664901532860606512090082402431L;
inline constexpr long double stieltjes_gamma1 = -0.0728158454836767248605863758749013191L;

} // namespace cuspsum
