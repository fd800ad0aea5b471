#include "hopfforge/invariants.hpp"

#include <stdexcept>
#include <vector>

#include "hopfforge/modular.hpp"
#include "hopfforge/ratfunc.hpp"
#include "hopfforge/rowspace.hpp"

namespace hopfforge {

bool is_commutative(const HopfData& H) {
    const std::size_t n = H.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (H.C.at(i, j, k) != H.C.at(j, i, k)) return false;
    return true;
}

bool is_cocommutative(const HopfData& H) {
    const std::size_t n = H.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (H.D.at(i, j, k) != H.D.at(i, k, j)) return false;
    return true;
}

CycMatrix mu_delta_matrix(const HopfData& H) {
    const std::size_t n = H.n;
    CycMatrix M(n, n, zero_like(H.one));
    for (const auto& d : H.D.nonzeros()) {
        for (std::size_t l = 0; l < n; ++l)
            add_mul(M.at(l, d.i), *d.value, H.C.at(d.j, d.k, l));
    }
    return M;
}

namespace {

// Uniform view on "H as algebra" (the mul tensor) and "the dual as algebra"
// (comul read backwards): entry (i,j,k) is the e_k coefficient of e_i * e_j.
struct MulView {
    const Tensor3<CycScalar>& t;
    bool from_comul;
    const CycScalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return from_comul ? t.at(k, i, j) : t.at(i, j, k);
    }
};

std::vector<CycScalar> mul_left(const MulView& A, std::size_t n, std::size_t j,
                                const std::vector<CycScalar>& v,
                                const CycScalar& zero) {
    std::vector<CycScalar> w(n, zero);
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) add_mul(w[l], v[k], A.c(j, k, l));
    }
    return w;
}

std::vector<CycScalar> mul_right(const MulView& A, std::size_t n,
                                 const std::vector<CycScalar>& v,
                                 std::size_t j, const CycScalar& zero) {
    std::vector<CycScalar> w(n, zero);
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) add_mul(w[l], v[k], A.c(k, j, l));
    }
    return w;
}

// Structure constants of the quotient algebra on the complement coordinates
// of an ideal, as a dense cube indexed by the complement positions.
std::vector<CycScalar> quotient_tensor(const MulView& A, std::size_t n,
                                       const RowSpace<CycScalar>& ideal,
                                       const std::vector<std::size_t>& comp,
                                       const CycScalar& zero) {
    const std::size_t q = comp.size();
    std::vector<CycScalar> Q(q * q * q, zero);
    std::vector<CycScalar> w(n, zero);
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            for (std::size_t l = 0; l < n; ++l) w[l] = A.c(comp[a], comp[b], l);
            ideal.reduce(w);
            for (std::size_t c = 0; c < q; ++c)
                Q[(a * q + b) * q + c] = w[comp[c]];
        }
    }
    return Q;
}

// rank of the trace form of the quotient algebra described by Q
std::size_t trace_form_rank(const std::vector<CycScalar>& Q, std::size_t q,
                            const CycScalar& zero) {
    std::vector<CycScalar> tl(q, zero); // trace of left multiplication
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t c = 0; c < q; ++c) tl[k] += Q[(k * q + c) * q + c];
    CycMatrix B(q, q, zero);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t k = 0; k < q; ++k)
                add_mul(B.at(a, b), Q[(a * q + b) * q + k], tl[k]);
    return B.rank();
}

// Characters over the closure of the unital algebra given by the view:
// abelianise by the closed commutator ideal, then count via the trace form.
std::size_t character_count(const MulView& A, std::size_t n,
                            const CycScalar& one) {
    const CycScalar zero = zero_like(one);
    RowSpace<CycScalar> ideal(n, one);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<CycScalar> w(n, zero);
            for (std::size_t l = 0; l < n; ++l)
                w[l] = A.c(a, b, l) - A.c(b, a, l);
            ideal.add(std::move(w));
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = ideal.rows();
        for (const auto& v : snapshot) {
            for (std::size_t j = 0; j < n; ++j) {
                if (ideal.add(mul_left(A, n, j, v, zero))) grew = true;
                if (ideal.add(mul_right(A, n, v, j, zero))) grew = true;
            }
        }
    }
    auto comp = ideal.complement();
    if (comp.empty()) return 0;
    auto Q = quotient_tensor(A, n, ideal, comp, zero);
    return trace_form_rank(Q, comp.size(), zero);
}

// Blocks over the closure: dimension of the centre of the algebra modulo its
// trace-form radical (the Jacobson radical in characteristic zero).
std::size_t block_count_view(const MulView& A, std::size_t n,
                             const CycScalar& one) {
    const CycScalar zero = zero_like(one);
    std::vector<CycScalar> tl(n, zero);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < n; ++c) tl[k] += A.c(k, c, c);
    CycMatrix T(n, n, zero);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                add_mul(T.at(a, b), A.c(a, b, k), tl[k]);
    RowSpace<CycScalar> radical(n, one);
    for (auto& v : T.kernel_basis()) radical.add(std::move(v));
    auto comp = radical.complement();
    const std::size_t s = comp.size();
    if (s == 0) return 0;
    auto Q = quotient_tensor(A, n, radical, comp, zero);
    // centre of the semisimple quotient: solve z*u_a = u_a*z for all a
    CycMatrix E(s * s, s, zero);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t l = 0; l < s; ++l)
            for (std::size_t c = 0; c < s; ++c)
                E.at(a * s + l, c) =
                    Q[(c * s + a) * s + l] - Q[(a * s + c) * s + l];
    return E.kernel_basis().size();
}

} // namespace

std::size_t grouplike_count(const HopfData& H) {
    return character_count(MulView{H.D, true}, H.n, one_like(H.one));
}

std::size_t dual_grouplike_count(const HopfData& H) {
    return character_count(MulView{H.C, false}, H.n, one_like(H.one));
}

std::size_t block_count(const HopfData& H) {
    return block_count_view(MulView{H.C, false}, H.n, one_like(H.one));
}

std::size_t dual_block_count(const HopfData& H) {
    return block_count_view(MulView{H.D, true}, H.n, one_like(H.one));
}

std::optional<std::size_t> antipode_order(const HopfData& H) {
    if (!H.S) throw std::invalid_argument("antipode_order: antipode required");
    const std::size_t n = H.n;
    const CycMatrix id = CycMatrix::identity(n, one_like(H.one));
    CycMatrix P = *H.S;
    const std::size_t bound = 2 * n * n;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (P == id) return k;
        P = P * (*H.S);
    }
    return std::nullopt;
}

std::size_t biderivation_dim(const HopfData& H) {
    const std::size_t n = H.n;
    const unsigned m = H.one.conductor();
    const CycScalar one = one_like(H.one);

    // unknown (r, c) at column r*n + c is the e_r coefficient of L(e_c)
    SparseCycMatrix sys;
    sys.conductor = m;
    sys.cols = n * n;
    sys.rows = 2 * n + 2 * n * n * n;
    auto mul_row = [n](std::size_t i, std::size_t j, std::size_t s) {
        return 2 * n + (i * n + j) * n + s;
    };
    auto comul_row = [n](std::size_t i, std::size_t j, std::size_t k) {
        return 2 * n + n * n * n + (i * n + j) * n + k;
    };

    // L applied to the unit vanishes
    for (std::size_t a = 0; a < n; ++a) sys.entries.push_back({a, a * n, one});
    // the counit kills every value of L
    for (std::size_t i = 0; i < n; ++i) {
        if (H.xi[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            sys.entries.push_back({n + j, i * n + j, H.xi[i]});
    }
    // derivation law for mul: L(xy) = L(x)y + xL(y), coefficientwise
    for (const auto& e : H.C.nonzeros()) {
        const CycScalar v = *e.value;
        const CycScalar neg = -v;
        for (std::size_t s = 0; s < n; ++s)
            sys.entries.push_back({mul_row(e.i, e.j, s), s * n + e.k, v});
        for (std::size_t i = 0; i < n; ++i)
            sys.entries.push_back({mul_row(i, e.j, e.k), e.i * n + i, neg});
        for (std::size_t j = 0; j < n; ++j)
            sys.entries.push_back({mul_row(e.i, j, e.k), e.j * n + j, neg});
    }
    // coderivation law for comul, same shape on the other side
    for (const auto& e : H.D.nonzeros()) {
        const CycScalar v = *e.value;
        const CycScalar neg = -v;
        for (std::size_t i = 0; i < n; ++i)
            sys.entries.push_back({comul_row(i, e.j, e.k), e.i * n + i, v});
        for (std::size_t j = 0; j < n; ++j)
            sys.entries.push_back({comul_row(e.i, j, e.k), j * n + e.j, neg});
        for (std::size_t k = 0; k < n; ++k)
            sys.entries.push_back({comul_row(e.i, e.j, k), k * n + e.k, neg});
    }

    const unsigned phi = CycScalar::zero(m).ncoeffs();
    auto res = rational_nullspace(expand_cyclotomic_system(sys));
    if (res.nullity % phi != 0)
        throw std::logic_error("biderivation_dim: inconsistent solve");
    return res.nullity / phi;
}

std::size_t orbit_dimension(const HopfData& H) {
    return H.n * H.n - biderivation_dim(H);
}

bool Fingerprint::operator==(const Fingerprint& o) const {
    return dim == o.dim && commutative == o.commutative &&
           cocommutative == o.cocommutative &&
           grouplike_count == o.grouplike_count &&
           dual_grouplike_count == o.dual_grouplike_count &&
           block_count == o.block_count &&
           dual_block_count == o.dual_block_count &&
           antipode_order == o.antipode_order && trace_S == o.trace_S &&
           rank_mu_delta == o.rank_mu_delta &&
           trace_mu_delta == o.trace_mu_delta &&
           biderivation_dim == o.biderivation_dim;
}

Fingerprint fingerprint(const HopfData& H) {
    if (!H.S) throw std::invalid_argument("fingerprint: antipode required");
    Fingerprint fp;
    fp.dim = H.n;
    fp.commutative = is_commutative(H);
    fp.cocommutative = is_cocommutative(H);
    fp.grouplike_count = grouplike_count(H);
    fp.dual_grouplike_count = dual_grouplike_count(H);
    fp.block_count = block_count(H);
    fp.dual_block_count = dual_block_count(H);
    fp.antipode_order = antipode_order(H);
    fp.trace_S = H.S->trace();
    CycMatrix M = mu_delta_matrix(H);
    fp.trace_mu_delta = M.trace();
    fp.rank_mu_delta = M.rank();
    fp.biderivation_dim = biderivation_dim(H);
    return fp;
}

} // namespace hopfforge
