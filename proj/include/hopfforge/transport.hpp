#ifndef HOPFFORGE_TRANSPORT_HPP
#define HOPFFORGE_TRANSPORT_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "hopfforge/structure.hpp"

namespace hopfforge {

// ===========================================================================
// Basis transport, unit normalization, dualization, antipode recovery, and
// isomorphism checking.
//
// transport(f, H) rewrites H in the basis b'_j = sum_i f(i,j) b_j, so
//   C' = f^-1 . mul . (f (x) f),   D' = (f^-1 (x) f^-1) . Delta . f,
//   xi' = xi . f,                  S' = f^-1 . S . f.
// This is a right action: transport(g*f, H) = transport(f, transport(g, H)).
// If f moves e_1 the result leaves the e_1-unit chart; normalize_unit brings
// such data back.
// ===========================================================================

namespace detail {

// One tensor leg at a time, each stage <= n^4 scalar multiplies.
template <class F>
Tensor3<F> transport_mul(const Matrix<F>& f, const Matrix<F>& g, const Tensor3<F>& C,
                         const F& zero) {
    const std::size_t n = C.dim();
    Tensor3<F> U(n, zero), V(n, zero), out(n, zero);
    for (const auto& e : C.nonzeros()) // U(i,b,l) = sum_a f(a,i) C(a,b,l)
        for (std::size_t i = 0; i < n; ++i) add_mul(U.at(i, e.j, e.k), f.at(e.i, i), *e.value);
    for (const auto& e : U.nonzeros()) // V(i,j,l) = sum_b f(b,j) U(i,b,l)
        for (std::size_t j = 0; j < n; ++j) add_mul(V.at(e.i, j, e.k), f.at(e.j, j), *e.value);
    for (const auto& e : V.nonzeros()) // out(i,j,k) = sum_l g(k,l) V(i,j,l)
        for (std::size_t k = 0; k < n; ++k) add_mul(out.at(e.i, e.j, k), g.at(k, e.k), *e.value);
    return out;
}

template <class F>
Tensor3<F> transport_comul(const Matrix<F>& f, const Matrix<F>& g, const Tensor3<F>& D,
                           const F& zero) {
    const std::size_t n = D.dim();
    Tensor3<F> X(n, zero), Y(n, zero), out(n, zero);
    for (const auto& e : D.nonzeros()) // X(i,b,c) = sum_a f(a,i) D(a,b,c)
        for (std::size_t i = 0; i < n; ++i) add_mul(X.at(i, e.j, e.k), f.at(e.i, i), *e.value);
    for (const auto& e : X.nonzeros()) // Y(i,j,c) = sum_b g(j,b) X(i,b,c)
        for (std::size_t j = 0; j < n; ++j) add_mul(Y.at(e.i, j, e.k), g.at(j, e.j), *e.value);
    for (const auto& e : Y.nonzeros()) // out(i,j,k) = sum_c g(k,c) Y(i,j,c)
        for (std::size_t k = 0; k < n; ++k) add_mul(out.at(e.i, e.j, k), g.at(k, e.k), *e.value);
    return out;
}

template <class F>
std::vector<F> transport_counit(const Matrix<F>& f, const std::vector<F>& xi, const F& zero) {
    const std::size_t n = xi.size();
    std::vector<F> out(n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) add_mul(out[i], xi[a], f.at(a, i));
    return out;
}

} // namespace detail

template <class F>
StructureData<F> transport(const Matrix<F>& f, const StructureData<F>& H) {
    if (f.rows() != H.n || f.cols() != H.n)
        throw std::invalid_argument("transport: map has the wrong shape");
    auto ginv = f.inverse();
    if (!ginv) throw std::invalid_argument("transport: map is singular");
    const Matrix<F>& g = *ginv;
    const F zero = H.zero();

    StructureData<F> out;
    out.n = H.n;
    out.one = H.one;
    out.C = detail::transport_mul(f, g, H.C, zero);
    out.D = detail::transport_comul(f, g, H.D, zero);
    out.xi = detail::transport_counit(f, H.xi, zero);
    if (H.S) out.S = g * (*H.S * f);
    out.meta = H.meta;
    return out;
}

template <class F>
RawStructure<F> transport_raw(const Matrix<F>& f, const RawStructure<F>& R) {
    if (f.rows() != R.n || f.cols() != R.n)
        throw std::invalid_argument("transport: map has the wrong shape");
    auto ginv = f.inverse();
    if (!ginv) throw std::invalid_argument("transport: map is singular");
    const Matrix<F>& g = *ginv;
    F zero = R.one;
    zero -= R.one;

    RawStructure<F> out;
    out.n = R.n;
    out.one = R.one;
    out.C = detail::transport_mul(f, g, R.C, zero);
    out.D = detail::transport_comul(f, g, R.D, zero);
    out.unit = g * R.unit;
    out.xi = detail::transport_counit(f, R.xi, zero);
    if (R.S) out.S = g * (*R.S * f);
    out.meta = R.meta;
    return out;
}

// ---------------------------------------------------------------------------
// Unit normalization: move an arbitrary unit vector u to e_1 by the pivoting
// substitution e_1 -> u, e_p -> e_1 (p = least index with u_p != 0), other
// basis vectors fixed.  Returns the normalized data together with the basis
// change that was applied.
// ---------------------------------------------------------------------------

template <class F>
struct Normalized {
    StructureData<F> data;
    Matrix<F> g; // the transport applied to the raw input
};

template <class F>
Normalized<F> normalize_unit(const RawStructure<F>& raw) {
    const std::size_t n = raw.n;
    F zero = raw.one;
    zero -= raw.one;
    const F one = one_like(raw.one);

    // check u really is a two-sided unit for the raw multiplication
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left = zero, right = zero;
            for (std::size_t a = 0; a < n; ++a) {
                add_mul(left, raw.unit[a], raw.C.at(a, i, k));
                add_mul(right, raw.unit[a], raw.C.at(i, a, k));
            }
            if (i == k) {
                left -= one;
                right -= one;
            }
            if (!is_zero(left) || !is_zero(right))
                throw std::invalid_argument("normalize_unit: vector is not a unit");
        }

    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(raw.unit[i])) {
            p = i;
            break;
        }
    if (p == n) throw std::invalid_argument("normalize_unit: zero vector");

    Matrix<F> g = Matrix<F>::identity(n, one);
    for (std::size_t i = 0; i < n; ++i) g.at(i, 0) = raw.unit[i];
    if (p != 0) {
        for (std::size_t i = 0; i < n; ++i) g.at(i, p) = (i == 0) ? one : zero;
    }

    RawStructure<F> moved = transport_raw(g, raw);
    Normalized<F> out{{}, g};
    out.data.n = n;
    out.data.one = raw.one;
    out.data.C = std::move(moved.C);
    out.data.D = std::move(moved.D);
    out.data.xi = std::move(moved.xi);
    out.data.S = std::move(moved.S);
    out.data.meta = raw.meta;
    return out;
}

// ---------------------------------------------------------------------------
// Dualization.  On raw structure constants this is the involution
//   C*(i,j,k) = D(k,i,j),  D*(i,j,k) = C(j,k,i),  unit* = xi,  xi* = e_1,
//   S* = transpose(S).
// dual() composes it with unit normalization and reports the basis change.
// ---------------------------------------------------------------------------

template <class F>
RawStructure<F> raw_dual(const StructureData<F>& H) {
    const std::size_t n = H.n;
    const F zero = H.zero();
    const F one = one_like(H.one);
    RawStructure<F> out;
    out.n = n;
    out.one = H.one;
    out.C = Tensor3<F>(n, zero);
    out.D = Tensor3<F>(n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_zero(H.D.at(k, i, j))) out.C.at(i, j, k) = H.D.at(k, i, j);
                if (!is_zero(H.C.at(j, k, i))) out.D.at(i, j, k) = H.C.at(j, k, i);
            }
    out.unit = H.xi;
    out.xi.assign(n, zero);
    out.xi[0] = one;
    if (H.S) out.S = H.S->transpose();
    out.meta = H.meta;
    if (!out.meta.name.empty()) out.meta.name += "^*";
    return out;
}

template <class F>
Normalized<F> dual(const StructureData<F>& H) {
    return normalize_unit(raw_dual(H));
}

// Map exhibiting the double dual and H as isomorphic: with g1, g2 the basis
// changes recorded by the two dual() calls, transporting dual(dual(H)) by
// g2^-1 * g1^T recovers the constants of H, i.e.
//   check_isomorphism(double_dual_map(g1, g2), dual(dual(H)), H) == true.
// (The columns are the evaluation images of H's basis in double-dual
// coordinates.)
template <class F>
Matrix<F> double_dual_map(const Matrix<F>& g1, const Matrix<F>& g2) {
    auto inv = g2.inverse();
    if (!inv) throw std::invalid_argument("double_dual_map: singular transport");
    return *inv * g1.transpose();
}

// ---------------------------------------------------------------------------
// Antipode recovery: solve both convolution identities
//   sum S(e_(1)) e_(2) = xi(.) e_1 = sum e_(1) S(e_(2))
// as one linear system in the n^2 matrix entries.  A bialgebra admits at most
// one antipode, so any solution is the antipode.
// ---------------------------------------------------------------------------

template <class F>
std::optional<Matrix<F>> compute_antipode(const StructureData<F>& H) {
    const std::size_t n = H.n;
    const F zero = H.zero();
    Matrix<F> A(2 * n * n, n * n, zero);
    std::vector<F> b(2 * n * n, zero);

    for (const auto& d : H.D.nonzeros()) { // (i, j, k)
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t t = 0; t < n; ++t) {
                const F& cl = H.C.at(r, d.k, t);
                if (!is_zero(cl)) add_mul(A.at(d.i * n + t, r * n + d.j), *d.value, cl);
                const F& cr = H.C.at(d.j, r, t);
                if (!is_zero(cr))
                    add_mul(A.at(n * n + d.i * n + t, r * n + d.k), *d.value, cr);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        b[i * n] = H.xi[i];
        b[n * n + i * n] = H.xi[i];
    }

    auto sol = Matrix<F>::solve(A, b);
    if (!sol) return std::nullopt;
    Matrix<F> S(n, n, zero);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) S.at(r, j) = (*sol)[r * n + j];
    return S;
}

// ---------------------------------------------------------------------------
// check_isomorphism: true iff transport(f, H1) matches H2 entry-wise on C, D,
// xi, and on S when both sides carry one.
// ---------------------------------------------------------------------------

template <class F>
bool check_isomorphism(const Matrix<F>& f, const StructureData<F>& H1,
                       const StructureData<F>& H2) {
    if (H1.n != H2.n) throw std::invalid_argument("check_isomorphism: dimension mismatch");
    StructureData<F> T = transport(f, H1);
    if (!(T.C == H2.C) || !(T.D == H2.D) || T.xi != H2.xi) return false;
    if (T.S && H2.S && !(*T.S == *H2.S)) return false;
    return true;
}

} // namespace hopfforge

#endif
