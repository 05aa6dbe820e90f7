#pragma once
// Shared numeric primitives: exact integer/rational aliases backed by GMP, checked
// 128-bit arithmetic, and conversions between the exact and floating-point worlds.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cuspsum {

using BigInt   = mpz_class;
using Rational = mpq_class;
using Real     = long double;
using int128   = __int128;
using uint128  = unsigned __int128;

inline constexpr int128 int128_max() { return (int128)(~(uint128)0 >> 1); }

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

// Overflow here means the caller's width analysis was wrong; report, never wrap.
inline int128 add_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int128 add overflow");
    return r;
}

inline int128 mul_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int128 mul overflow");
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = neg ? -(uint128)v : (uint128)v;
    char buf[48];
    int pos = 48;
    while (u) { buf[--pos] = char('0' + int(u % 10)); u /= 10; }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + pos, 48 - pos);
    return s;
}

inline BigInt to_bigint(int128 v) {
    bool neg = v < 0;
    uint128 u = neg ? -(uint128)v : (uint128)v;
    BigInt r{(unsigned long)(uint64_t)(u >> 64)};
    r <<= 64;
    r += (unsigned long)(uint64_t)u;
    return neg ? BigInt(-r) : r;
}

// floor(sqrt(x)), exact for every uint64 input.
inline uint64_t isqrt_u64(uint64_t x) {
    uint64_t r = (uint64_t)std::sqrt((double)x);
    if (r > 4294967295ull) r = 4294967295ull;
    while ((uint128)r * r > x) --r;
    while (r < 4294967295ull && (uint128)(r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline Real to_real(const BigInt& v) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp((Real)m, (int)e);
}

inline Real to_real(const Rational& q) { return (Real)mpq_get_d(q.get_mpq_t()); }

inline Real to_real(Real v) { return v; }

// log|v|; stays finite far beyond double range.
inline Real log_abs(const BigInt& v) {
    if (v == 0) throw std::domain_error("log of zero");
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs((Real)m)) + (Real)e * 0.69314718055994530942L;
}

inline BigInt pow_bigint(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Accepts "p", "-p", "p/q"; canonicalizes.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string format_real(Real v, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

} // namespace cuspsum
