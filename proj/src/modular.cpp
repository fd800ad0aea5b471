#include "hopfforge/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfforge/matrix.hpp"
#include "hopfforge/ratfunc.hpp"

namespace hopfforge {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("mod_inv: zero element");
    return mod_pow(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set decides primality for every 64-bit integer
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t prime_at_least(std::uint64_t n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

std::optional<std::uint64_t> rational_mod(const Rational& q, std::uint64_t p) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mod_mul(num, mod_inv(den, p), p);
}

SparseRatMatrix expand_cyclotomic_system(const SparseCycMatrix& M) {
    const unsigned m = M.conductor;
    const unsigned phi = CycScalar::zero(m).ncoeffs();
    SparseRatMatrix out;
    out.rows = M.rows * phi;
    out.cols = M.cols * phi;
    out.entries.reserve(M.entries.size() * phi);
    for (const auto& e : M.entries) {
        if (e.value.is_zero()) continue;
        for (unsigned c = 0; c < phi; ++c) {
            CycScalar w = e.value * CycScalar::zeta_pow(m, c);
            for (unsigned r = 0; r < phi; ++r) {
                if (is_zero(w.coeff(r))) continue;
                out.entries.push_back(
                    {e.row * phi + r, e.col * phi + c, w.coeff(r)});
            }
        }
    }
    return out;
}

namespace {

// CSR-style row grouping of the triplets; duplicates stay separate and are
// summed wherever a row is materialised.
struct RowBuckets {
    std::vector<std::size_t> start; // rows + 1 offsets into order
    std::vector<std::size_t> order; // entry indices grouped by row
};

RowBuckets group_rows(const SparseRatMatrix& M) {
    RowBuckets b;
    b.start.assign(M.rows + 1, 0);
    for (const auto& e : M.entries) ++b.start[e.row + 1];
    for (std::size_t i = 0; i < M.rows; ++i) b.start[i + 1] += b.start[i];
    b.order.resize(M.entries.size());
    std::vector<std::size_t> cursor(b.start.begin(), b.start.end() - 1);
    for (std::size_t i = 0; i < M.entries.size(); ++i)
        b.order[cursor[M.entries[i].row]++] = i;
    return b;
}

// Incremental reduced echelon form of the system mod p.
struct ModRref {
    std::uint64_t p = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> rows; // pivot columns increasing
    std::vector<std::size_t> pivot;

    void feed(std::vector<std::uint64_t>& v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint64_t f = v[pivot[r]];
            if (f == 0) continue;
            const auto& row = rows[r];
            for (std::size_t j = pivot[r]; j < cols; ++j) {
                if (row[j])
                    v[j] = (v[j] + p - mod_mul(f, row[j], p)) % p;
            }
        }
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j]) {
                lead = j;
                break;
            }
        }
        if (lead == cols) return;
        std::uint64_t inv = mod_inv(v[lead], p);
        for (std::size_t j = lead; j < cols; ++j)
            if (v[j]) v[j] = mod_mul(v[j], inv, p);
        // clear this column in the stored rows to stay fully reduced
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint64_t f = rows[r][lead];
            if (f == 0) continue;
            for (std::size_t j = lead; j < cols; ++j) {
                if (v[j])
                    rows[r][j] = (rows[r][j] + p - mod_mul(f, v[j], p)) % p;
            }
        }
        std::size_t pos = 0;
        while (pos < pivot.size() && pivot[pos] < lead) ++pos;
        rows.insert(rows.begin() + pos, v);
        pivot.insert(pivot.begin() + pos, lead);
    }
};

// Runs the elimination for one prime. Returns nothing when p divides a
// denominator somewhere in the system.
std::optional<ModRref> eliminate_mod(const SparseRatMatrix& M,
                                     const RowBuckets& b, std::uint64_t p) {
    ModRref e;
    e.p = p;
    e.cols = M.cols;
    std::vector<std::uint64_t> v(M.cols);
    for (std::size_t i = 0; i < M.rows; ++i) {
        if (b.start[i] == b.start[i + 1]) continue;
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t k = b.start[i]; k < b.start[i + 1]; ++k) {
            const auto& ent = M.entries[b.order[k]];
            auto img = rational_mod(ent.value, p);
            if (!img) return std::nullopt;
            v[ent.col] = (v[ent.col] + *img) % p;
        }
        e.feed(v);
    }
    return e;
}

std::vector<std::size_t> free_columns(const ModRref& e) {
    std::vector<bool> is_pivot(e.cols, false);
    for (std::size_t c : e.pivot) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < e.cols; ++j)
        if (!is_pivot[j]) free.push_back(j);
    return free;
}

// Canonical kernel basis mod p: one vector per free column, that coordinate
// set to 1 and pivot coordinates filled from the echelon rows.
std::vector<std::vector<std::uint64_t>> kernel_mod(
    const ModRref& e, const std::vector<std::size_t>& free) {
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(free.size());
    for (std::size_t f : free) {
        std::vector<std::uint64_t> v(e.cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            std::uint64_t a = e.rows[r][f];
            if (a) v[e.pivot[r]] = e.p - a;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Rational reconstruction in the symmetric range: finds num/den with
// num = r * den (mod M), |num| and den bounded by sqrt(M/2).
std::optional<Rational> reconstruct(const Integer& r, const Integer& M) {
    Integer bound = sqrt(M / 2);
    Integer u0 = M, u1 = r % M;
    if (u1 < 0) u1 += M;
    Integer v0 = 0, v1 = 1;
    while (u1 > bound) {
        Integer q = u0 / u1;
        Integer t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (sgn(v1) == 0) return std::nullopt;
    Integer num = u1, den = v1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return std::nullopt;
    if (gcd(num, den) != 1) return std::nullopt;
    return make_rational(num, den);
}

bool verify_null_vector(const SparseRatMatrix& M,
                        const std::vector<Rational>& v) {
    std::vector<Rational> acc(M.rows, Rational(0));
    for (const auto& e : M.entries) {
        if (!is_zero(v[e.col])) acc[e.row] += e.value * v[e.col];
    }
    for (const auto& a : acc)
        if (!is_zero(a)) return false;
    return true;
}

NullspaceResult dense_exact_nullspace(const SparseRatMatrix& M) {
    Matrix<Rational> A(M.rows ? M.rows : 1, M.cols, Rational(0));
    for (const auto& e : M.entries) A.at(e.row, e.col) += e.value;
    NullspaceResult out;
    out.basis = A.kernel_basis();
    out.nullity = out.basis.size();
    out.certified_modular = false;
    return out;
}

} // namespace

NullspaceResult rational_nullspace(const SparseRatMatrix& M) {
    if (M.cols == 0) return {0, {}, true};
    const RowBuckets buckets = group_rows(M);

    constexpr int kMaxPrimes = 12;
    std::uint64_t p = prime_at_least(1ull << 61);

    std::size_t nullity = 0;
    std::vector<std::size_t> free;
    // CRT state per (vector, coordinate)
    std::vector<std::vector<Integer>> crt;
    Integer modulus = 1;

    for (int used = 0; used < kMaxPrimes; p = prime_at_least(p + 2)) {
        auto elim = eliminate_mod(M, buckets, p);
        if (!elim) continue; // p divides a denominator, unusable prime
        ++used;
        auto f = free_columns(*elim);
        if (f.empty()) {
            // full column rank mod p forces full rank over Q
            return {0, {}, true};
        }
        if (modulus != 1 && f.size() > free.size()) {
            continue; // unlucky prime: its rank dropped below the best seen
        }
        if (modulus == 1 || f.size() < free.size() || f != free) {
            // first usable prime, or a strictly better rank, or a different
            // pivot pattern at the same rank: restart the CRT accumulation
            free = f;
            nullity = free.size();
            auto basis_p = kernel_mod(*elim, free);
            crt.assign(nullity, {});
            for (std::size_t i = 0; i < nullity; ++i) {
                crt[i].resize(M.cols);
                for (std::size_t j = 0; j < M.cols; ++j)
                    crt[i][j] = Integer(static_cast<unsigned long>(basis_p[i][j]));
            }
            modulus = Integer(static_cast<unsigned long>(p));
        } else {
            auto basis_p = kernel_mod(*elim, free);
            std::uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
            std::uint64_t minv = mod_inv(m_mod_p, p);
            for (std::size_t i = 0; i < nullity; ++i) {
                for (std::size_t j = 0; j < M.cols; ++j) {
                    std::uint64_t cur = mpz_fdiv_ui(crt[i][j].get_mpz_t(), p);
                    std::uint64_t delta =
                        mod_mul((basis_p[i][j] + p - cur) % p, minv, p);
                    crt[i][j] += modulus * Integer(static_cast<unsigned long>(delta));
                }
            }
            modulus *= Integer(static_cast<unsigned long>(p));
        }

        // try to lift the whole basis to Q and verify it exactly
        std::vector<std::vector<Rational>> lifted;
        lifted.reserve(nullity);
        bool ok = true;
        for (std::size_t i = 0; i < nullity && ok; ++i) {
            std::vector<Rational> v(M.cols, Rational(0));
            for (std::size_t j = 0; j < M.cols && ok; ++j) {
                auto q = reconstruct(crt[i][j], modulus);
                if (!q)
                    ok = false;
                else
                    v[j] = *q;
            }
            if (ok) lifted.push_back(std::move(v));
        }
        if (ok) {
            for (const auto& v : lifted)
                if (!verify_null_vector(M, v)) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            // nullity over Q is at most the mod-p nullity (rank can only
            // drop under reduction), and the verified vectors, independent by
            // their unit coordinates on the free columns, reach that bound
            return {nullity, std::move(lifted), true};
        }
    }
    return dense_exact_nullspace(M);
}

} // namespace hopfforge
