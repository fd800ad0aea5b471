#ifndef HOPFFORGE_VERIFY_HPP
#define HOPFFORGE_VERIFY_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfforge/scalar_io.hpp"
#include "hopfforge/structure.hpp"

namespace hopfforge {

// ===========================================================================
// Axiom verifier.  Checks are grouped into named families:
//
//   1a  associativity                    1b  unit rows
//   2a  coassociativity                  2b  right counit    2c  left counit
//   3a  multiplicativity of Delta        3b  Delta on e_1    3c  counit is a
//                                                                character
//   4a  left antipode law                4b  right antipode law
//
// Every violating index tuple is counted; the first few per family are kept
// with the exact nonzero residual, rendered as a scalar string.  Indices in
// reports are 1-based to match the interchange format.
// ===========================================================================

struct AxiomFailure {
    std::string family;
    std::vector<std::size_t> index; // 1-based
    std::string residual;
};

struct FamilyResult {
    bool pass = true;
    std::size_t violations = 0;
};

struct VerificationReport {
    bool pass = true;
    std::map<std::string, FamilyResult> families;
    std::vector<AxiomFailure> failures;

    static constexpr std::size_t kMaxStoredPerFamily = 50;

    void note(const std::string& family, std::vector<std::size_t> idx, std::string residual) {
        FamilyResult& fr = families[family];
        fr.pass = false;
        ++fr.violations;
        pass = false;
        if (fr.violations <= kMaxStoredPerFamily)
            failures.push_back({family, std::move(idx), std::move(residual)});
    }

    void mark(const std::string& family) { families.emplace(family, FamilyResult{}); }

    void merge(const VerificationReport& o) {
        pass = pass && o.pass;
        for (const auto& [k, v] : o.families) families[k] = v;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

namespace detail {

template <class F>
struct SparseView {
    std::size_t n;
    struct JKV {
        std::size_t j, k;
        const F* v;
    };
    struct KV {
        std::size_t k;
        const F* v;
    };
    std::vector<std::vector<JKV>> by_first;  // [i] -> entries (j,k)
    std::vector<std::vector<JKV>> by_middle; // [j] -> entries (i,k)
    std::vector<std::vector<KV>> by_pair;    // [i*n+j] -> entries k

    explicit SparseView(const Tensor3<F>& T)
        : n(T.dim()), by_first(n), by_middle(n), by_pair(n * n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const F& v = T.at(i, j, k);
                    if (is_zero(v)) continue;
                    by_first[i].push_back({j, k, &v});
                    by_middle[j].push_back({i, k, &v});
                    by_pair[i * n + j].push_back({k, &v});
                }
    }
};

} // namespace detail

template <class F>
VerificationReport verify_bialgebra(const StructureData<F>& H) {
    using detail::SparseView;
    const std::size_t n = H.n;
    const F zero = H.zero();
    const F one = one_like(H.one);
    VerificationReport rep;
    for (const char* f : {"1a", "1b", "2a", "2b", "2c", "3a", "3b", "3c"}) rep.mark(f);

    SparseView<F> C(H.C);
    SparseView<F> D(H.D);

    auto flat4 = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return ((a * n + b) * n + c) * n + d;
    };

    // 1a: sum_l C(i,j,l) C(l,k,s) - sum_l C(i,l,s) C(j,k,l) = 0
    {
        std::vector<F> R(n * n * n * n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& e : C.by_first[i]) // (j, l)
                for (const auto& f : C.by_first[e.k]) // (k, s)
                    add_mul(R[flat4(i, e.j, f.j, f.k)], *e.v, *f.v);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : C.by_first[j]) // (k, l)
                for (const auto& f : C.by_middle[e.k]) // (i, s)
                    sub_mul(R[flat4(f.j, j, e.j, f.k)], *e.v, *f.v);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t s = 0; s < n; ++s) {
                        const F& r = R[flat4(i, j, k, s)];
                        if (!is_zero(r))
                            rep.note("1a", {i + 1, j + 1, k + 1, s + 1}, to_string(r));
                    }
    }

    // 1b: e_1 is a two-sided unit
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left = H.C.at(0, i, k);
            F right = H.C.at(i, 0, k);
            if (i == k) {
                left -= one;
                right -= one;
            }
            if (!is_zero(left)) rep.note("1b", {1, i + 1, k + 1}, to_string(left));
            if (!is_zero(right)) rep.note("1b", {i + 1, 1, k + 1}, to_string(right));
        }

    // 2a: sum_l D(s,l,k) D(l,i,j) - sum_l D(s,i,l) D(l,j,k) = 0
    {
        std::vector<F> R(n * n * n * n, zero);
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& e : D.by_first[s]) // (l, k)
                for (const auto& f : D.by_first[e.j]) // (i, j)
                    add_mul(R[flat4(s, f.j, f.k, e.k)], *e.v, *f.v);
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& e : D.by_first[s]) // (i, l)
                for (const auto& f : D.by_first[e.k]) // (j, k)
                    sub_mul(R[flat4(s, e.j, f.j, f.k)], *e.v, *f.v);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        const F& r = R[flat4(s, i, j, k)];
                        if (!is_zero(r))
                            rep.note("2a", {s + 1, i + 1, j + 1, k + 1}, to_string(r));
                    }
    }

    // 2b / 2c: counit against each tensor leg of Delta
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F right = zero; // sum_l D(i,j,l) xi_l
            F left = zero;  // sum_l D(i,l,j) xi_l
            for (std::size_t l = 0; l < n; ++l) {
                add_mul(right, H.D.at(i, j, l), H.xi[l]);
                add_mul(left, H.D.at(i, l, j), H.xi[l]);
            }
            if (i == j) {
                right -= one;
                left -= one;
            }
            if (!is_zero(right)) rep.note("2b", {i + 1, j + 1}, to_string(right));
            if (!is_zero(left)) rep.note("2c", {i + 1, j + 1}, to_string(left));
        }

    // 3a: Delta(e_i e_j) = Delta(e_i) Delta(e_j), entrywise in e_k (x) e_s
    {
        std::vector<F> R(n * n * n * n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& e : C.by_first[i]) // (j, l)
                for (const auto& f : D.by_first[e.k]) // (k, s)
                    add_mul(R[flat4(i, e.j, f.j, f.k)], *e.v, *f.v);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& di : D.by_first[i]) // (r, t)
                for (std::size_t j = 0; j < n; ++j)
                    for (const auto& dj : D.by_first[j]) { // (p, q)
                        F w = *di.v * *dj.v;
                        for (const auto& ck : C.by_pair[di.j * n + dj.j]) { // (k)
                            F w2 = w * *ck.v;
                            for (const auto& cs : C.by_pair[di.k * n + dj.k]) // (s)
                                sub_mul(R[flat4(i, j, ck.k, cs.k)], w2, *cs.v);
                        }
                    }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t s = 0; s < n; ++s) {
                        const F& r = R[flat4(i, j, k, s)];
                        if (!is_zero(r))
                            rep.note("3a", {i + 1, j + 1, k + 1, s + 1}, to_string(r));
                    }
    }

    // 3b: Delta(e_1) = e_1 (x) e_1
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            F r = H.D.at(0, j, k);
            if (j == 0 && k == 0) r -= one;
            if (!is_zero(r)) rep.note("3b", {j + 1, k + 1}, to_string(r));
        }

    // 3c: xi(e_1) = 1 and xi(e_i e_j) = xi(e_i) xi(e_j)
    {
        F r0 = H.xi[0];
        r0 -= one;
        if (!is_zero(r0)) rep.note("3c", {1}, to_string(r0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                F r = zero;
                for (const auto& e : C.by_pair[i * n + j]) add_mul(r, *e.v, H.xi[e.k]);
                sub_mul(r, H.xi[i], H.xi[j]);
                if (!is_zero(r)) rep.note("3c", {i + 1, j + 1}, to_string(r));
            }
    }

    return rep;
}

template <class F>
VerificationReport verify_antipode(const StructureData<F>& H) {
    if (!H.S) throw std::logic_error("verify_antipode: no antipode present");
    const std::size_t n = H.n;
    const F zero = H.zero();
    VerificationReport rep;
    rep.mark("4a");
    rep.mark("4b");

    detail::SparseView<F> C(H.C);
    detail::SparseView<F> D(H.D);
    const Matrix<F>& S = *H.S;

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<F> accL(n, zero), accR(n, zero);
        for (const auto& d : D.by_first[i]) { // (j, k)
            for (std::size_t r = 0; r < n; ++r) {
                // left law: S acts on the first tensor leg
                const F& sj = S.at(r, d.j);
                if (!is_zero(sj)) {
                    F w = *d.v * sj;
                    for (const auto& c : C.by_pair[r * n + d.k]) add_mul(accL[c.k], w, *c.v);
                }
                // right law: S acts on the second tensor leg
                const F& sk = S.at(r, d.k);
                if (!is_zero(sk)) {
                    F w = *d.v * sk;
                    for (const auto& c : C.by_pair[d.j * n + r]) add_mul(accR[c.k], w, *c.v);
                }
            }
        }
        accL[0] -= H.xi[i];
        accR[0] -= H.xi[i];
        for (std::size_t t = 0; t < n; ++t) {
            if (!is_zero(accL[t])) rep.note("4a", {i + 1, t + 1}, to_string(accL[t]));
            if (!is_zero(accR[t])) rep.note("4b", {i + 1, t + 1}, to_string(accR[t]));
        }
    }
    return rep;
}

// Full check: bialgebra axioms always; antipode laws when an antipode is given.
template <class F>
VerificationReport verify_hopf(const StructureData<F>& H) {
    VerificationReport rep = verify_bialgebra(H);
    if (H.S) rep.merge(verify_antipode(H));
    return rep;
}

} // namespace hopfforge

#endif
