#pragma once
// Linear smallest-prime-factor sieve carrying Moebius values, divisor counts and
// Mertens prefix sums, plus a segmented recomputation path and the exact rational
// tail of the reciprocal Moebius sum.

#include "cuspsum/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cuspsum {

// Every n in [2, limit] factors as n = rest[n] * spf[n]^spf_exp[n] with
// gcd(rest[n], spf[n]) = 1 and rest[n] < n, so multiplicative fills pop one
// prime power per step in O(1).
struct SieveTables {
    uint64_t limit = 0;
    std::vector<uint32_t> spf;
    std::vector<uint32_t> rest;
    std::vector<uint8_t>  spf_exp;
    std::vector<int8_t>   mobius;
    std::vector<uint32_t> divisors;
    std::vector<int32_t>  mertens;   // mertens[x] = sum_{n<=x} mobius(n)
    std::vector<uint32_t> primes;
};

inline SieveTables build_sieves(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("sieve limit must be >= 1");
    if (limit > 0xffffffffull) throw std::out_of_range("sieve limit exceeds 32-bit table range");
    SieveTables t;
    t.limit = limit;
    t.spf.assign(limit + 1, 0);
    t.rest.assign(limit + 1, 0);
    t.spf_exp.assign(limit + 1, 0);
    t.mobius.assign(limit + 1, 0);
    t.divisors.assign(limit + 1, 0);
    t.mertens.assign(limit + 1, 0);
    t.spf[1] = 1;
    t.rest[1] = 1;
    t.mobius[1] = 1;
    t.divisors[1] = 1;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = (uint32_t)i;
            t.rest[i] = 1;
            t.spf_exp[i] = 1;
            t.mobius[i] = -1;
            t.divisors[i] = 2;
            t.primes.push_back((uint32_t)i);
        }
        for (uint32_t p : t.primes) {
            if (p > t.spf[i] || i * p > limit) break;
            uint64_t ip = i * p;
            t.spf[ip] = p;
            if (p == t.spf[i]) {
                t.rest[ip] = t.rest[i];
                t.spf_exp[ip] = uint8_t(t.spf_exp[i] + 1);
                t.mobius[ip] = 0;
                t.divisors[ip] = t.divisors[i] / (t.spf_exp[i] + 1u) * (t.spf_exp[i] + 2u);
            } else {
                t.rest[ip] = (uint32_t)i;
                t.spf_exp[ip] = 1;
                t.mobius[ip] = int8_t(-t.mobius[i]);
                t.divisors[ip] = t.divisors[i] * 2;
            }
        }
    }
    int32_t run = 0;
    for (uint64_t n = 1; n <= limit; ++n) {
        run += t.mobius[n];
        t.mertens[n] = run;
    }
    return t;
}

inline int64_t mertens(const SieveTables& t, uint64_t x) {
    if (x < 1 || x > t.limit) throw std::out_of_range("mertens: x outside sieve range");
    return t.mertens[x];
}

inline std::vector<std::pair<uint32_t, uint32_t>> factorize(const SieveTables& t, uint64_t n) {
    if (n < 1 || n > t.limit) throw std::out_of_range("factorize: n outside sieve range");
    std::vector<std::pair<uint32_t, uint32_t>> f;
    while (n > 1) {
        f.emplace_back(t.spf[n], t.spf_exp[n]);
        n = t.rest[n];
    }
    return f;
}

// d(n^2) = prod (2e_i + 1) over the factorization of n; table indexed by n.
inline std::vector<uint32_t> divisor_square_values(const SieveTables& t, uint64_t n_max) {
    if (n_max > t.limit) throw std::out_of_range("divisor_square_values: n outside sieve range");
    std::vector<uint32_t> d(n_max + 1, 0);
    if (n_max >= 1) d[1] = 1;
    for (uint64_t n = 2; n <= n_max; ++n)
        d[n] = d[t.rest[n]] * (2u * t.spf_exp[n] + 1u);
    return d;
}

inline std::vector<uint64_t> divisor_list(const SieveTables& t, uint64_t n) {
    auto f = factorize(t, n);
    std::vector<uint64_t> divs{1};
    for (auto [p, e] : f) {
        size_t base = divs.size();
        uint64_t pk = 1;
        for (uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace detail {

inline std::vector<uint32_t> primes_up_to(uint64_t n) {
    std::vector<uint8_t> composite(n + 1, 0);
    std::vector<uint32_t> primes;
    for (uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back((uint32_t)i);
        for (uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return primes;
}

// Moebius over [lo, hi] using only primes <= sqrt(hi).
inline void mobius_window(uint64_t lo, uint64_t hi,
                          const std::vector<uint32_t>& primes,
                          std::vector<int8_t>& mu) {
    size_t len = size_t(hi - lo + 1);
    mu.assign(len, 1);
    std::vector<uint64_t> rem(len);
    for (size_t i = 0; i < len; ++i) rem[i] = lo + i;
    for (uint32_t p : primes) {
        for (uint64_t j = (lo + p - 1) / p * p; j <= hi; j += p) {
            size_t i = size_t(j - lo);
            mu[i] = int8_t(-mu[i]);
            rem[i] /= p;
        }
        uint64_t p2 = (uint64_t)p * p;
        for (uint64_t j = (lo + p2 - 1) / p2 * p2; j <= hi; j += p2)
            mu[j - lo] = 0;
    }
    for (size_t i = 0; i < len; ++i) {
        if (mu[i] == 0) continue;
        if (rem[i] > 1) mu[i] = int8_t(-mu[i]); // one leftover prime > sqrt(hi)
        if (lo + i == 1) mu[i] = 1;
    }
}

} // namespace detail

inline std::vector<int8_t> mobius_segment(uint64_t lo, uint64_t hi) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("mobius_segment: bad window");
    auto primes = detail::primes_up_to(isqrt_u64(hi));
    std::vector<int8_t> mu;
    detail::mobius_window(lo, hi, primes, mu);
    return mu;
}

// M(x) recomputed in fixed-size windows; independent of the monolithic table.
inline int64_t mertens_segmented(uint64_t x, uint32_t segment = 1u << 20) {
    if (segment == 0) throw std::invalid_argument("segment size must be positive");
    if (x == 0) return 0;
    auto primes = detail::primes_up_to(isqrt_u64(x));
    int64_t m = 0;
    std::vector<int8_t> mu;
    for (uint64_t lo = 1; lo <= x; lo += segment) {
        uint64_t hi = std::min(x, lo + segment - 1);
        detail::mobius_window(lo, hi, primes, mu);
        for (size_t i = 0; i < size_t(hi - lo + 1); ++i) m += mu[i];
    }
    return m;
}

// Exact sum_{m<=y} mu(m)/m; balanced splits keep the gmp denominators shallow.
inline Rational mobius_reciprocal_sum(const SieveTables& t, uint64_t y) {
    if (y > t.limit) throw std::out_of_range("mobius_reciprocal_sum: y outside sieve range");
    std::function<Rational(uint64_t, uint64_t)> range = [&](uint64_t lo, uint64_t hi) {
        if (hi - lo < 32) {
            Rational s(0);
            for (uint64_t m = lo; m <= hi; ++m)
                if (t.mobius[m] != 0) s += Rational(t.mobius[m], m);
            return s;
        }
        uint64_t mid = lo + (hi - lo) / 2;
        return Rational(range(lo, mid) + range(mid + 1, hi));
    };
    if (y == 0) return Rational(0);
    Rational r = range(1, y);
    r.canonicalize();
    return r;
}

// Tail of the reciprocal Moebius sum: since the full series vanishes,
// sum_{m>y} mu(m)/m = -sum_{m<=y} mu(m)/m.
inline Rational mobius_reciprocal_tail(const SieveTables& t, uint64_t y) {
    Rational r = -mobius_reciprocal_sum(t, y);
    r.canonicalize();
    return r;
}

} // namespace cuspsum
