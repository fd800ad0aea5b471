#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "hopfforge/rational.hpp"
#include "hopfforge/cyclotomic.hpp"

namespace hopfforge {

// Word-sized prime-field arithmetic. All moduli used here are < 2^62 so the
// products fit in unsigned __int128 with room to spare.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Smallest prime >= n.
std::uint64_t prime_at_least(std::uint64_t n);

// Image of a rational in F_p, or nothing when p divides the denominator.
std::optional<std::uint64_t> rational_mod(const Rational& q, std::uint64_t p);

// Sparse linear system over Q, row-major triplets. Duplicate (row, col)
// entries are allowed and are summed.
struct SparseEntry {
    std::size_t row;
    std::size_t col;
    Rational value;
};

struct SparseRatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseEntry> entries;
};

// Sparse system over Q(zeta_m).
struct SparseCycEntry {
    std::size_t row;
    std::size_t col;
    CycScalar value;
};

struct SparseCycMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    unsigned conductor = 1;
    std::vector<SparseCycEntry> entries;
};

// Restriction of scalars: rewrite a system over Q(zeta_m) as a system over Q
// with phi(m) times as many rows and columns. Unknown (col, c) of the output
// is the zeta^c coordinate of unknown col, equation (row, r) of the output is
// the zeta^r coordinate of equation row. The Q-nullity of the result is
// phi(m) times the Q(zeta_m)-nullity of the input.
SparseRatMatrix expand_cyclotomic_system(const SparseCycMatrix& M);

struct NullspaceResult {
    std::size_t nullity = 0;
    // One vector per nullity, each of length cols, in the canonical
    // reduced-echelon form (one distinguished coordinate set to 1 per vector).
    std::vector<std::vector<Rational>> basis;
    // True when the answer came from the modular route: the dimension is then
    // certified by a mod-p rank bound on one side and exactly verified null
    // vectors on the other. False means the dense exact fallback ran.
    bool certified_modular = false;
};

// Exact nullspace of a sparse rational system. Works modulo machine-word
// primes and reconstructs the kernel basis by CRT plus rational
// reconstruction; every reconstructed vector is verified against the exact
// system before the result is returned, so the output is always exact. Falls
// back to dense exact elimination if reconstruction keeps failing.
NullspaceResult rational_nullspace(const SparseRatMatrix& M);

} // namespace hopfforge
