#pragma once
// Expansion of a prime-indexed system to a full multiplicative coefficient table,
// square-index tables via the prime-power recursion, and the classical identity
// checks that validate a table against its defining relations.

#include "cuspsum/numeric.hpp"
#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace cuspsum {

template <class T>
inline T value_from_bigint(const BigInt& b) {
    return T(b);
}
template <>
inline Real value_from_bigint<Real>(const BigInt& b) {
    return to_real(b);
}

inline std::string value_to_string(const BigInt& v, int = 0) { return v.get_str(); }
inline std::string value_to_string(Real v, int digits = 15) { return format_real(v, digits); }

template <class T>
struct CoefficientTable {
    std::string provenance;
    uint64_t limit = 0;
    std::vector<T> values; // index n in [1, limit]; slot 0 unused

    const T& at(uint64_t n) const {
        if (n < 1 || n > limit)
            throw std::out_of_range("coefficient index " + std::to_string(n) +
                                    " outside [1, " + std::to_string(limit) + "]");
        return values[n];
    }
};

// t(p^e) by running the two-term recursion up from e = 1.
template <class T>
inline T prime_power_value(const SatakeSystem<T>& sys, uint32_t p, uint32_t e) {
    if (e == 0) return T(1);
    const T& tp = sys.at_prime(p);
    T prev(1), cur(tp);
    if (sys.kind == HeckeKind::normalized) {
        for (uint32_t k = 1; k < e; ++k) {
            T next = tp * cur - prev;
            prev = cur;
            cur = next;
        }
    } else {
        T pk = value_from_bigint<T>(pow_bigint(BigInt(p), sys.weight - 1));
        for (uint32_t k = 1; k < e; ++k) {
            T next = tp * cur - pk * prev;
            prev = cur;
            cur = next;
        }
    }
    return cur;
}

template <class T>
inline T coefficient_at(const SatakeSystem<T>& sys, const SieveTables& sv, uint64_t n) {
    T acc(1);
    for (auto [p, e] : factorize(sv, n)) acc = acc * prime_power_value(sys, p, e);
    return acc;
}

// Full table on [1, N]. Prime powers step the recursion from the two previous powers
// (both are lower indices); composites split off their spf part, also lower indices.
template <class T>
inline CoefficientTable<T> hecke_expand(const SatakeSystem<T>& sys, uint64_t N,
                                        const SieveTables& sv) {
    if (N > sv.limit) throw std::out_of_range("hecke_expand: table limit exceeds sieve range");
    if (N < 1) throw std::invalid_argument("hecke_expand: empty table");
    CoefficientTable<T> t;
    t.provenance = sys.label;
    t.limit = N;
    t.values.assign(N + 1, T(0));
    t.values[1] = T(1);
    for (uint64_t n = 2; n <= N; ++n) {
        uint32_t r = sv.rest[n];
        if (r == 1) {
            uint32_t p = sv.spf[n];
            uint32_t e = sv.spf_exp[n];
            if (e == 1) {
                t.values[n] = sys.at_prime(p);
            } else if (sys.kind == HeckeKind::normalized) {
                t.values[n] = sys.at_prime(p) * t.values[n / p] - t.values[n / p / p];
            } else {
                T pk = value_from_bigint<T>(pow_bigint(BigInt(p), sys.weight - 1));
                t.values[n] = sys.at_prime(p) * t.values[n / p] - pk * t.values[n / p / p];
            }
        } else {
            t.values[n] = t.values[r] * t.values[n / r];
        }
    }
    return t;
}

// t(p^{2e}) by the same recursion run to depth 2e.
template <class T>
inline T square_coefficient(const SatakeSystem<T>& sys, const SieveTables& sv, uint64_t n) {
    T acc(1);
    for (auto [p, e] : factorize(sv, n)) acc = acc * prime_power_value(sys, p, 2 * e);
    return acc;
}

// Table of n -> t(n^2) on [1, N]; prime-power slots memoize the recursion so the
// composite fill is one multiply per index.
template <class T>
inline CoefficientTable<T> square_table(const SatakeSystem<T>& sys, uint64_t N,
                                        const SieveTables& sv) {
    if (N > sv.limit) throw std::out_of_range("square_table: table limit exceeds sieve range");
    if (N < 1) throw std::invalid_argument("square_table: empty table");
    CoefficientTable<T> t;
    t.provenance = sys.label + " (square indices)";
    t.limit = N;
    t.values.assign(N + 1, T(0));
    t.values[1] = T(1);
    for (uint64_t n = 2; n <= N; ++n) {
        uint32_t r = sv.rest[n];
        if (r == 1)
            t.values[n] = prime_power_value(sys, sv.spf[n], 2u * sv.spf_exp[n]);
        else
            t.values[n] = t.values[r] * t.values[n / r];
    }
    return t;
}

// t(n^2) - sum_{d|n} mu(d) d^{kappa-1} t(n/d)^2; zero for every multiplicative
// system obeying the Hecke recursions. kappa = 1 is the normalized identity;
// for weighted tables the d^{kappa-1} factors are what survive clearing the
// n^{(kappa-1)/2} normalization from the squarefree inversion.
template <class T>
inline T mobius_square_gap(const CoefficientTable<T>& f, const T& square_value,
                           unsigned kappa, const SieveTables& sv, uint64_t n) {
    if (kappa < 1) throw std::invalid_argument("mobius_square_gap: weight must be >= 1");
    auto fac = factorize(sv, n);
    size_t w = fac.size();
    T acc(0);
    for (size_t mask = 0; mask < (size_t(1) << w); ++mask) {
        uint64_t d = 1;
        int sign = 1;
        for (size_t i = 0; i < w; ++i)
            if (mask >> i & 1) {
                d *= fac[i].first;
                sign = -sign;
            }
        const T& v = f.at(n / d);
        T term = v * v;
        if (kappa > 1)
            term = term * value_from_bigint<T>(pow_bigint(BigInt((unsigned long)d), kappa - 1));
        if (sign > 0) acc = acc + term;
        else acc = acc - term;
    }
    return square_value - acc;
}

// a(m) a(n) - sum_{d | gcd(m,n)} d^{kappa-1} a(mn/d^2); zero when the table obeys
// the weight-kappa multiplicative relation (kappa = 1 is the normalized case).
template <class T>
inline T hecke_relation_gap(const CoefficientTable<T>& f, unsigned kappa,
                            const SieveTables& sv, uint64_t m, uint64_t n) {
    if (kappa < 1) throw std::invalid_argument("hecke_relation_gap: weight must be >= 1");
    if (m < 1 || n < 1 || m * n > f.limit)
        throw std::out_of_range("hecke_relation_gap: mn outside table");
    uint64_t g = std::gcd(m, n);
    T acc(0);
    for (uint64_t d : divisor_list(sv, g)) {
        T term = f.at(m * n / (d * d));
        if (kappa > 1)
            term = term * value_from_bigint<T>(pow_bigint(BigInt((unsigned long)d), kappa - 1));
        acc = acc + term;
    }
    return f.at(m) * f.at(n) - acc;
}

template <class T>
inline void export_table_csv(const CoefficientTable<T>& f, std::ostream& out, int digits = 15) {
    out << "n,value\n";
    for (uint64_t n = 1; n <= f.limit; ++n)
        out << n << ',' << value_to_string(f.values[n], digits) << '\n';
}

// a(n) n^{-(weight-1)/2} as a floating table.
inline CoefficientTable<Real> normalize_table(const CoefficientTable<BigInt>& f, unsigned weight) {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("normalize_table: even weight >= 2 required");
    CoefficientTable<Real> t;
    t.provenance = f.provenance + " (normalized)";
    t.limit = f.limit;
    t.values.assign(f.limit + 1, 0.0L);
    Real half = (Real)(weight - 1) / 2.0L;
    for (uint64_t n = 1; n <= f.limit; ++n)
        t.values[n] = to_real(f.values[n]) * std::pow((Real)n, -half);
    return t;
}

} // namespace cuspsum
