#pragma once
// A multiplicative coefficient system is determined by one value per prime plus the
// recursion flavor extending it to prime powers. Systems are immutable once built
// and safe to share read-only.

#include "cuspsum/numeric.hpp"
#include "cuspsum/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cuspsum {

enum class HeckeKind { normalized, weighted };

// Synthetic spectral metadata; alpha_j is a supplied weight, never derived.
struct SpectralParams {
    Real kappa = 0;
    Real alpha_j = 0;
};

// normalized:  t(p^{k+1}) = t(p) t(p^k) - t(p^{k-1})
// weighted:    a(p^{k+1}) = a(p) a(p^k) - p^{weight-1} a(p^{k-1})
template <class T>
struct SatakeSystem {
    std::string label;
    HeckeKind kind = HeckeKind::normalized;
    unsigned weight = 0;                  // weighted kind only; even, >= 2
    Rational alpha_exponent{0};           // exponent in the |t(n)| << n^alpha bound
    bool ramanujan = false;               // |t(p)| <= 2 holds for every listed prime
    std::optional<SpectralParams> spectral;
    std::vector<std::pair<uint32_t, T>> prime_values; // sorted by prime

    bool has_prime(uint32_t p) const {
        auto it = std::lower_bound(prime_values.begin(), prime_values.end(), p,
                                   [](const auto& a, uint32_t q) { return a.first < q; });
        return it != prime_values.end() && it->first == p;
    }

    const T& at_prime(uint32_t p) const {
        auto it = std::lower_bound(prime_values.begin(), prime_values.end(), p,
                                   [](const auto& a, uint32_t q) { return a.first < q; });
        if (it == prime_values.end() || it->first != p)
            throw std::invalid_argument("system '" + label + "' has no value at prime " +
                                        std::to_string(p));
        return it->second;
    }

    void finalize() {
        std::sort(prime_values.begin(), prime_values.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < prime_values.size(); ++i)
            if (prime_values[i].first == prime_values[i - 1].first)
                throw std::invalid_argument("system '" + label + "' lists prime " +
                                            std::to_string(prime_values[i].first) + " twice");
        if (kind == HeckeKind::weighted && (weight < 2 || weight % 2 != 0))
            throw std::invalid_argument("weighted system '" + label +
                                        "' needs an even weight >= 2");
        if (alpha_exponent < 0)
            throw std::invalid_argument("system '" + label + "' has negative growth exponent");
        if (spectral && (spectral->kappa <= 0 || spectral->alpha_j <= 0))
            throw std::invalid_argument("system '" + label + "' has non-positive spectral params");
    }
};

// d(p^k) = k+1 is exactly the normalized recursion seeded with t(p) = 2.
inline SatakeSystem<BigInt> divisor_system(const SieveTables& sv, uint64_t prime_limit) {
    SatakeSystem<BigInt> s;
    s.label = "divisor";
    s.kind = HeckeKind::normalized;
    s.ramanujan = true;
    s.alpha_exponent = Rational(0);
    for (uint32_t p : sv.primes) {
        if (p > prime_limit) break;
        s.prime_values.emplace_back(p, BigInt(2));
    }
    s.finalize();
    return s;
}

// Deterministic synthetic system: t(p) drawn uniformly from [-9, 9]. The modulo draw
// is deliberate; it is bit-identical across platforms, unlike the distribution adaptors.
inline SatakeSystem<BigInt> random_system(const SieveTables& sv, uint64_t prime_limit,
                                          uint64_t seed) {
    SatakeSystem<BigInt> s;
    s.label = "random-" + std::to_string(seed);
    s.kind = HeckeKind::normalized;
    s.alpha_exponent = Rational(4); // coarse: recursion growth root stays below 2^4
    std::mt19937_64 engine(seed);
    for (uint32_t p : sv.primes) {
        if (p > prime_limit) break;
        s.prime_values.emplace_back(p, BigInt((long)(engine() % 19) - 9));
    }
    s.finalize();
    return s;
}

// Text exchange format: optional "# key: value" metadata lines (label, kind, weight),
// then one "p value" pair per line, exact integers only.
inline SatakeSystem<BigInt> load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open system file: " + path);
    SatakeSystem<BigInt> s;
    s.label = path;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            auto colon = body.find(':');
            if (colon == std::string::npos) continue;
            std::string key = body.substr(0, colon), val = body.substr(colon + 1);
            auto strip = [](std::string& t) {
                t.erase(0, t.find_first_not_of(" \t"));
                t.erase(t.find_last_not_of(" \t") + 1);
            };
            strip(key);
            strip(val);
            if (key == "label") s.label = val;
            else if (key == "kind") {
                if (val == "normalized") s.kind = HeckeKind::normalized;
                else if (val == "weighted") s.kind = HeckeKind::weighted;
                else throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                                 ": unknown kind '" + val + "'");
            } else if (key == "weight") s.weight = (unsigned)std::stoul(val);
            continue;
        }
        std::istringstream row(line);
        unsigned long p;
        std::string value;
        if (!(row >> p >> value))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'p value'");
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), value.c_str(), 10) != 0)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": not an integer: '" + value + "'");
        s.prime_values.emplace_back((uint32_t)p, v);
    }
    s.finalize();
    return s;
}

inline void save_system(const SatakeSystem<BigInt>& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write system file: " + path);
    out << "# label: " << s.label << "\n";
    out << "# kind: " << (s.kind == HeckeKind::weighted ? "weighted" : "normalized") << "\n";
    if (s.kind == HeckeKind::weighted) out << "# weight: " << s.weight << "\n";
    for (const auto& [p, v] : s.prime_values) out << p << " " << v.get_str() << "\n";
}

} // namespace cuspsum
