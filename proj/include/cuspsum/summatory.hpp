#pragma once
// Square-index summatory machinery: the direct prefix sums F(x) = sum_{n<=x} f(n^2)
// and S(y) = sum_{n<=y} f(n)^2, and the divisor-swap decomposition
//   sigma1 = sum_{m<=sqrt(x)} mu(m) m^w S(floor(x/m))
//   sigma2 = sum_{n<=sqrt(x)} f(n)^2 (M_w(floor(x/n)) - M_w(floor(sqrt(x))))
// with M_w(y) = sum_{d<=y} mu(d) d^w, which must reproduce F(x) exactly for
// exact-integer systems. The weight w is kappa-1 for weighted systems and 0 for
// normalized ones (where M_0 is the plain Mertens table): clearing the n^{(kappa-1)/2}
// normalization from the square identity deposits exactly these d^w factors. All
// range cuts are integer floors; the inner Moebius sums are differences off one
// precomputed prefix table.

#include "cuspsum/hecke.hpp"
#include "cuspsum/numeric.hpp"
#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"

#include <cstdint>
#include <vector>

namespace cuspsum {

template <class T>
struct HyperbolaReport {
    uint64_t x = 0;
    T sigma1{0};
    T sigma2{0};
    T direct{0};
    bool equal = false;
};

namespace detail {

inline bool sums_equal(const BigInt& lhs, const BigInt& rhs) { return lhs == rhs; }
inline bool sums_equal(Real lhs, Real rhs) {
    Real scale = std::max<Real>(1.0L, std::fabs(rhs));
    return std::fabs(lhs - rhs) <= 1e-9L * scale;
}

} // namespace detail

template <class T>
struct SummatoryTables {
    CoefficientTable<T> f;           // f(n)
    std::vector<T> square_prefix;    // S[y]
    std::vector<T> fsq_prefix;       // F[x], built over f(n^2)
    std::vector<T> weighted_mertens; // M_w[y]; built only when weight_exponent > 0
    unsigned weight_exponent = 0;    // kappa - 1 for weighted systems, 0 otherwise
    uint64_t limit = 0;

    const T& mean_square(uint64_t y) const {
        if (y < 1 || y > limit) throw std::out_of_range("mean_square: y outside tables");
        return square_prefix[y];
    }
    const T& direct_square_sum(uint64_t x) const {
        if (x < 1 || x > limit) throw std::out_of_range("direct_square_sum: x outside tables");
        return fsq_prefix[x];
    }
};

template <class T>
inline SummatoryTables<T> build_summatory(const SatakeSystem<T>& sys, uint64_t N,
                                          const SieveTables& sv) {
    SummatoryTables<T> t;
    t.limit = N;
    t.f = hecke_expand(sys, N, sv);
    auto fsq = square_table(sys, N, sv);
    t.square_prefix.assign(N + 1, T(0));
    t.fsq_prefix.assign(N + 1, T(0));
    for (uint64_t n = 1; n <= N; ++n) {
        t.square_prefix[n] = t.square_prefix[n - 1] + t.f.values[n] * t.f.values[n];
        t.fsq_prefix[n] = t.fsq_prefix[n - 1] + fsq.values[n];
    }
    t.weight_exponent = sys.kind == HeckeKind::weighted ? sys.weight - 1 : 0;
    if (t.weight_exponent > 0) {
        t.weighted_mertens.assign(N + 1, T(0));
        BigInt acc(0), dw;
        for (uint64_t d = 1; d <= N; ++d) {
            if (sv.mobius[d] != 0) {
                mpz_ui_pow_ui(dw.get_mpz_t(), d, t.weight_exponent);
                if (sv.mobius[d] > 0) acc += dw;
                else acc -= dw;
            }
            t.weighted_mertens[d] = value_from_bigint<T>(acc);
        }
    }
    return t;
}

template <class T>
inline HyperbolaReport<T> hyperbola_decompose(const SummatoryTables<T>& t,
                                              const SieveTables& sv, uint64_t x) {
    if (x < 1 || x > t.limit) throw std::out_of_range("hyperbola_decompose: x outside tables");
    if (x > sv.limit) throw std::out_of_range("hyperbola_decompose: x outside sieve");
    HyperbolaReport<T> r;
    r.x = x;
    uint64_t rx = isqrt_u64(x);
    for (uint64_t m = 1; m <= rx; ++m) {
        int8_t mu = sv.mobius[m];
        if (mu == 0) continue;
        T term = t.square_prefix[x / m];
        if (t.weight_exponent > 0)
            term = term * value_from_bigint<T>(pow_bigint(BigInt((unsigned long)m),
                                                          t.weight_exponent));
        if (mu > 0) r.sigma1 = r.sigma1 + term;
        else r.sigma1 = r.sigma1 - term;
    }
    if (t.weight_exponent == 0) {
        int64_t m_rx = sv.mertens[rx];
        for (uint64_t n = 1; n <= rx; ++n) {
            long dm = (long)sv.mertens[x / n] - m_rx;
            if (dm == 0) continue;
            r.sigma2 = r.sigma2 + t.f.values[n] * t.f.values[n] * T(dm);
        }
    } else {
        const T& m_rx = t.weighted_mertens[rx];
        for (uint64_t n = 1; n <= rx; ++n) {
            T dm = t.weighted_mertens[x / n] - m_rx;
            if (dm == T(0)) continue;
            r.sigma2 = r.sigma2 + t.f.values[n] * t.f.values[n] * dm;
        }
    }
    r.direct = t.fsq_prefix[x];
    r.equal = detail::sums_equal(T(r.sigma1 + r.sigma2), r.direct);
    return r;
}

} // namespace cuspsum
