#ifndef HOPFFORGE_RANDOM_MAPS_HPP
#define HOPFFORGE_RANDOM_MAPS_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "hopfforge/matrix.hpp"

namespace hopfforge {

// Seeded generators for basis-change experiments.  Entries are kept small
// (a + b*zeta^j with a, b in [-2, 2]) so that exact arithmetic downstream
// stays cheap.  All draws go through std::mt19937_64 for reproducibility.

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("HOPFFORGE_SEED")) {
        try {
            return std::stoull(std::string(s));
        } catch (...) {
            // fall through to the default on malformed input
        }
    }
    return fallback;
}

inline CycScalar random_cyc_entry(std::mt19937_64& rng, unsigned m) {
    std::uniform_int_distribution<int> small(-2, 2);
    CycScalar v = CycScalar::from_int(m, small(rng));
    if (m > 1) {
        std::uniform_int_distribution<int> coin(0, 3);
        if (coin(rng) == 0) {
            std::uniform_int_distribution<unsigned> pw(1, m - 1);
            CycScalar z = CycScalar::zeta_pow(m, pw(rng));
            z.scale(Rational(small(rng)));
            v += z;
        }
    }
    return v;
}

inline Matrix<CycScalar> random_map(std::mt19937_64& rng, std::size_t n, unsigned m) {
    Matrix<CycScalar> f(n, n, CycScalar::zero(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f.at(i, j) = random_cyc_entry(rng, m);
    return f;
}

// Invertible map fixing e_1 (first column), suitable for transporting
// structures that keep the unit pinned to the first basis vector.
inline Matrix<CycScalar> random_unital_map(std::mt19937_64& rng, std::size_t n, unsigned m) {
    for (;;) {
        Matrix<CycScalar> f = random_map(rng, n, m);
        for (std::size_t i = 0; i < n; ++i)
            f.at(i, 0) = i == 0 ? CycScalar::one(m) : CycScalar::zero(m);
        if (!is_zero(f.determinant())) return f;
    }
}

inline Matrix<CycScalar> random_invertible_map(std::mt19937_64& rng, std::size_t n, unsigned m) {
    for (;;) {
        Matrix<CycScalar> f = random_map(rng, n, m);
        if (!is_zero(f.determinant())) return f;
    }
}

// Map of prescribed rank r < n, built as a product of an n x r and an r x n
// random factor (resampled until the rank is exactly r).
inline Matrix<CycScalar> random_singular_map(std::mt19937_64& rng, std::size_t n, unsigned m,
                                             std::size_t r) {
    for (;;) {
        Matrix<CycScalar> A(n, r, CycScalar::zero(m)), B(r, n, CycScalar::zero(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j) A.at(i, j) = random_cyc_entry(rng, m);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) B.at(i, j) = random_cyc_entry(rng, m);
        Matrix<CycScalar> f = A * B;
        if (f.rank() == r) return f;
    }
}

} // namespace hopfforge

#endif
