#pragma once
// Exact discriminant-coefficient tables. The cube of the Euler factor collapses to
// the alternating odd-triangular series (about sqrt(2N) terms), so its eighth power
// is assembled as: seed the square by a double loop over the sparse terms, then six
// in-place dense-by-sparse multiply passes, O(N^1.5) word operations overall.
//
// The fixed-width engine works in 128-bit throughout. Final values stay below
// d(n) n^{11/2} ~= 1.1e37 at the largest supported N, a factor 15 inside the signed
// range; every add and multiply is overflow-checked and throws rather than wrap, so
// a wrong bound is loud, never silent.

#include "cuspsum/hecke.hpp"
#include "cuspsum/numeric.hpp"
#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"

#include <cstdint>
#include <vector>

namespace cuspsum {

enum class TauEngine { automatic, checked_int, bignum };

// Largest N where the fixed-width stage bounds hold with headroom.
inline constexpr uint64_t tau_checked_int_limit = 2000000;

namespace detail {

struct SparseTerm {
    uint64_t exp;  // k(k+1)/2
    int64_t coef;  // (-1)^k (2k+1)
};

inline std::vector<SparseTerm> eta_cube_terms(uint64_t n_max) {
    std::vector<SparseTerm> t;
    for (uint64_t k = 0;; ++k) {
        uint64_t e = k * (k + 1) / 2;
        if (e >= n_max) break;
        t.push_back({e, (k % 2 ? -1 : 1) * (int64_t)(2 * k + 1)});
    }
    return t;
}

// In-place multiply of the dense array by the sparse series. Descending order keeps
// the reads (all at indices <= n) on the previous pass's values; the k = 0 term has
// coefficient 1 and is the initial accumulator.
inline void sparse_pass_i128(std::vector<int128>& d, const std::vector<SparseTerm>& t) {
    std::vector<int128> thr(t.size());
    for (size_t k = 0; k < t.size(); ++k)
        thr[k] = int128_max() / (t[k].coef < 0 ? -t[k].coef : t[k].coef);
    for (uint64_t n = d.size(); n-- > 0;) {
        int128 acc = d[n];
        for (size_t k = 1; k < t.size() && t[k].exp <= n; ++k) {
            int128 v = d[n - t[k].exp];
            if (abs128(v) > thr[k]) throw std::overflow_error("series int128 stage");
            if (__builtin_add_overflow(acc, v * (int128)t[k].coef, &acc))
                throw std::overflow_error("series int128 stage");
        }
        d[n] = acc;
    }
}

inline void sparse_pass_bignum(std::vector<BigInt>& d, const std::vector<SparseTerm>& t) {
    for (uint64_t n = d.size(); n-- > 0;) {
        mpz_ptr acc = d[n].get_mpz_t();
        for (size_t k = 1; k < t.size() && t[k].exp <= n; ++k) {
            mpz_srcptr v = d[n - t[k].exp].get_mpz_t();
            if (t[k].coef > 0) mpz_addmul_ui(acc, v, (unsigned long)t[k].coef);
            else mpz_submul_ui(acc, v, (unsigned long)(-t[k].coef));
        }
    }
}

inline void seed_square(std::vector<BigInt>& d, const std::vector<SparseTerm>& t) {
    uint64_t N = d.size();
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = 0; b < t.size(); ++b) {
            uint64_t e = t[a].exp + t[b].exp;
            if (e >= N) break;
            d[e] += t[a].coef * t[b].coef;
        }
}

inline void seed_square(std::vector<int128>& d, const std::vector<SparseTerm>& t) {
    uint64_t N = d.size();
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = 0; b < t.size(); ++b) {
            uint64_t e = t[a].exp + t[b].exp;
            if (e >= N) break;
            d[e] = add_checked(d[e], (int128)(t[a].coef * t[b].coef));
        }
}

inline std::vector<int128> delta_series_checked(uint64_t N) {
    auto t = eta_cube_terms(N);
    std::vector<int128> d(N, 0);
    seed_square(d, t); // square of the cube series
    for (int pass = 0; pass < 6; ++pass) sparse_pass_i128(d, t); // up to the 8th power
    return d;
}

inline std::vector<BigInt> delta_series_bignum(uint64_t N) {
    auto t = eta_cube_terms(N);
    std::vector<BigInt> d(N, BigInt(0));
    seed_square(d, t);
    for (int pass = 0; pass < 6; ++pass) sparse_pass_bignum(d, t);
    return d;
}

} // namespace detail

// Exact table of the discriminant coefficients on [1, N].
inline CoefficientTable<BigInt> tau_table(uint64_t N, TauEngine engine = TauEngine::automatic) {
    if (N < 1) throw std::invalid_argument("tau_table: empty table");
    if (engine == TauEngine::automatic)
        engine = N <= tau_checked_int_limit ? TauEngine::checked_int : TauEngine::bignum;
    CoefficientTable<BigInt> t;
    t.provenance = "ramanujan-tau";
    t.limit = N;
    t.values.assign(N + 1, BigInt(0));
    if (engine == TauEngine::checked_int) {
        auto d = detail::delta_series_checked(N);
        for (uint64_t n = 1; n <= N; ++n) t.values[n] = to_bigint(d[n - 1]);
    } else {
        auto d = detail::delta_series_bignum(N);
        for (uint64_t n = 1; n <= N; ++n) t.values[n] = std::move(d[n - 1]);
    }
    return t;
}

// Weighted system seeded with the table's prime values.
inline SatakeSystem<BigInt> tau_prime_system(const CoefficientTable<BigInt>& tau,
                                             const SieveTables& sv) {
    SatakeSystem<BigInt> s;
    s.label = "tau";
    s.kind = HeckeKind::weighted;
    s.weight = 12;
    s.alpha_exponent = Rational(11, 2);
    for (uint32_t p : sv.primes) {
        if (p > tau.limit) break;
        s.prime_values.emplace_back(p, tau.values[p]);
    }
    s.finalize();
    return s;
}

// Normalized real system t(p) = a(p) p^{-11/2}; satisfies the two-sided bound
// |t(p)| <= 2.
inline SatakeSystem<Real> tau_normalized_system(const CoefficientTable<BigInt>& tau,
                                                const SieveTables& sv) {
    SatakeSystem<Real> s;
    s.label = "tau-normalized";
    s.kind = HeckeKind::normalized;
    s.ramanujan = true;
    s.alpha_exponent = Rational(0);
    for (uint32_t p : sv.primes) {
        if (p > tau.limit) break;
        s.prime_values.emplace_back(p, to_real(tau.values[p]) * std::pow((Real)p, -5.5L));
    }
    s.finalize();
    return s;
}

} // namespace cuspsum
