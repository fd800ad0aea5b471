#include "hopfforge/degeneration.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "hopfforge/transport.hpp"
#include "hopfforge/verify.hpp"

namespace hopfforge {

namespace {

// out(i,j,k) = sum_a M(a,i) T(a,j,k): substitute the image of e_i under the
// map M into the first tensor slot
Tensor3<CycScalar> leg1(const CycMatrix& M, const Tensor3<CycScalar>& T, const CycScalar& zero) {
    const std::size_t n = T.dim();
    Tensor3<CycScalar> out(n, zero);
    for (const auto& e : T.nonzeros())
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(M.at(e.i, i))) add_mul(out.at(i, e.j, e.k), M.at(e.i, i), *e.value);
    return out;
}

// out(i,j,k) = sum_b M(b,j) T(i,b,k): same for the second slot
Tensor3<CycScalar> leg2(const CycMatrix& M, const Tensor3<CycScalar>& T, const CycScalar& zero) {
    const std::size_t n = T.dim();
    Tensor3<CycScalar> out(n, zero);
    for (const auto& e : T.nonzeros())
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(M.at(e.j, j))) add_mul(out.at(e.i, j, e.k), M.at(e.j, j), *e.value);
    return out;
}

// out(i,j,k) += sign * sum_l M(k,l) T(i,j,l): postcompose M on the value slot
void add_out(Tensor3<CycScalar>& out, const CycMatrix& M, const Tensor3<CycScalar>& T,
             bool negate) {
    const std::size_t n = T.dim();
    for (const auto& e : T.nonzeros())
        for (std::size_t k = 0; k < n; ++k) {
            const CycScalar& m = M.at(k, e.k);
            if (is_zero(m)) continue;
            if (negate) {
                CycScalar v = m * *e.value;
                out.at(e.i, e.j, k) -= v;
            } else {
                add_mul(out.at(e.i, e.j, k), m, *e.value);
            }
        }
}

// matrix of Delta(e_x): row j, column k
CycMatrix delta_slice(const Tensor3<CycScalar>& D, std::size_t x, const CycScalar& zero) {
    const std::size_t n = D.dim();
    CycMatrix M(n, n, zero);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) M.at(j, k) = D.at(x, j, k);
    return M;
}

std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const CycMatrix& M) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!is_zero(M.at(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

// two-sided unit of the multiplication table, when one exists
std::optional<std::vector<CycScalar>> solve_unit(const Tensor3<CycScalar>& C,
                                                 const CycScalar& zero, const CycScalar& one) {
    const std::size_t n = C.dim();
    CycMatrix A(2 * n * n, n, zero);
    std::vector<CycScalar> b(2 * n * n, zero);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                A.at(j * n + k, i) = C.at(i, j, k);
                A.at(n * n + j * n + k, i) = C.at(j, i, k);
            }
            if (j == k) {
                b[j * n + k] = one;
                b[n * n + j * n + k] = one;
            }
        }
    return CycMatrix::solve(A, b);
}

// two-sided counit of the comultiplication table, when one exists
std::optional<std::vector<CycScalar>> solve_counit(const Tensor3<CycScalar>& D,
                                                   const CycScalar& zero, const CycScalar& one) {
    const std::size_t n = D.dim();
    CycMatrix A(2 * n * n, n, zero);
    std::vector<CycScalar> b(2 * n * n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                A.at(i * n + k, j) = D.at(i, j, k);
                A.at(n * n + i * n + k, j) = D.at(i, k, j);
            }
            if (i == k) {
                b[i * n + k] = one;
                b[n * n + i * n + k] = one;
            }
        }
    return CycMatrix::solve(A, b);
}

// Shared tail of both routes: find unit and counit of the limit tables,
// renormalize the unit to e_1, and settle the antipode (keep H's when it
// still works, otherwise recompute).  Fills the report in place.
void finalize_limit(const HopfData& H, Tensor3<CycScalar> C0, Tensor3<CycScalar> D0,
                    DegenerationReport& rep) {
    const CycScalar zero = H.zero();
    const CycScalar one = one_like(H.one);

    auto u = solve_unit(C0, zero, one);
    rep.unit_found = u.has_value();
    if (!u) {
        rep.verdict = "limit multiplication admits no unit";
        return;
    }
    auto eps = solve_counit(D0, zero, one);
    rep.counit_found = eps.has_value();
    if (!eps) {
        rep.verdict = "limit comultiplication admits no counit";
        return;
    }

    RawStructure<CycScalar> raw;
    raw.n = H.n;
    raw.one = H.one;
    raw.C = std::move(C0);
    raw.D = std::move(D0);
    raw.unit = std::move(*u);
    raw.xi = std::move(*eps);
    raw.S = H.S;
    raw.meta = H.meta;
    HopfData lim = normalize_unit(raw).data;

    if (lim.S && !verify_antipode(lim).pass) lim.S.reset();
    if (!lim.S) {
        if (auto S2 = compute_antipode(lim)) lim.S = std::move(*S2);
    }
    rep.antipode_found = lim.S.has_value();

    if (!verify_bialgebra(lim).pass) {
        rep.verdict = "limit tables fail bialgebra verification";
        return;
    }
    if (!lim.meta.name.empty()) lim.meta.name += " limit";
    rep.limit = std::move(lim);
    rep.verdict = rep.antipode_found
                      ? "degeneration exists"
                      : "degeneration exists as a bialgebra; no antipode found";
}

std::string pole_name(const char* table, const std::vector<std::size_t>& idx) {
    std::ostringstream os;
    os << table << "[";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "]";
    return os.str();
}

// Adjugate and determinant of (phi + t*id) as polynomials in t, by the trace
// recursion for the characteristic polynomial of -phi.  Working with the
// polynomial pair (adjugate, determinant) instead of rational-function
// entries keeps every coefficient small; rational-function elimination blows
// up badly on random dense maps.
struct PolyInverse {
    std::vector<TPoly> adj; // row-major n x n, adj[i*n + j]
    TPoly det;
};

PolyInverse char_poly_inverse(const CycMatrix& phi) {
    const std::size_t n = phi.rows();
    const unsigned m = phi.at(0, 0).conductor();
    const CycScalar czero = CycScalar::zero(m);
    const CycScalar cone = CycScalar::one(m);

    CycMatrix B(n, n, czero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) B.at(i, j) = czero - phi.at(i, j);

    // M_1 = id; c_{n-k} = -tr(B M_k)/k; M_{k+1} = B M_k + c_{n-k} id
    std::vector<CycScalar> c(n + 1, czero);
    c[n] = cone;
    PolyInverse out{std::vector<TPoly>(n * n, tpoly_zero(m)), tpoly_zero(m)};
    CycMatrix Mk = CycMatrix::identity(n, cone);
    CycScalar kk = czero;
    for (std::size_t k = 1; k <= n; ++k) {
        // adj(t*id + phi) = sum_k t^{n-k} M_k
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(Mk.at(i, j)))
                    out.adj[i * n + j] += TPoly::monomial(cone, Mk.at(i, j), n - k);
        CycMatrix BM = B * Mk;
        kk += cone;
        c[n - k] = czero - BM.trace() / kk;
        if (k < n) {
            Mk = std::move(BM);
            for (std::size_t i = 0; i < n; ++i) Mk.at(i, i) += c[n - k];
        }
    }
    out.det = TPoly(cone, std::move(c));

    // exact certificate: (phi + t*id) * adj = det * id
    TPoly f_diag = tpoly_t(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            TPoly acc = tpoly_zero(m);
            for (std::size_t l = 0; l < n; ++l) {
                TPoly fil = tpoly_constant(phi.at(i, l));
                if (i == l) fil += f_diag;
                acc += fil * out.adj[l * n + j];
            }
            if (acc != (i == j ? out.det : tpoly_zero(m)))
                throw std::logic_error("char_poly_inverse: adjugate identity failed");
        }
    return out;
}

// limit at t = 0 of num / det^power given ord_0(det); pole when the
// numerator's order at 0 falls short
struct PolyLimit {
    bool is_pole = false;
    CycScalar value;
};

PolyLimit poly_limit(const TPoly& num, const TPoly& det, int power, long det_ord) {
    PolyLimit out;
    out.value = zero_like(det.coeff(0));
    if (num.is_zero_poly()) return out;
    const long threshold = det_ord * power;
    const long no = num.ord();
    if (no < threshold) {
        out.is_pole = true;
    } else if (no == threshold) {
        CycScalar den = det.coeff(static_cast<std::size_t>(det_ord));
        for (int p = 1; p < power; ++p)
            den = den * det.coeff(static_cast<std::size_t>(det_ord));
        out.value = num.coeff(static_cast<std::size_t>(no)) / den;
    }
    return out;
}

} // namespace

std::string describe_violation(const ConditionViolation& v) {
    std::ostringstream os;
    os << v.where << " at [";
    for (std::size_t i = 0; i < v.index.size(); ++i) os << (i ? "," : "") << v.index[i];
    os << "]";
    return os.str();
}

std::optional<ConditionViolation> check_mul_condition(const HopfData& H,
                                                      const FittingData& fit) {
    const std::size_t n = H.n;
    const CycScalar zero = H.zero();
    const Tensor3<CycScalar> T1 = leg1(fit.phi, H.C, zero);
    const Tensor3<CycScalar> T2 = leg2(fit.phi, H.C, zero);
    const Tensor3<CycScalar> T12 = leg2(fit.phi, T1, zero);
    const CycMatrix phi_PN = fit.phi * fit.P_N;
    const CycMatrix phi2_PN = fit.phi * phi_PN;

    Tensor3<CycScalar> R(n, zero);
    add_out(R, phi2_PN, H.C, false);
    add_out(R, phi_PN, T1, true);
    add_out(R, phi_PN, T2, true);
    add_out(R, fit.P_N, T12, false);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(R.at(i, j, k)))
                    return ConditionViolation{"multiplication condition", {i + 1, j + 1, k + 1}};
    return std::nullopt;
}

std::optional<ConditionViolation> check_comul_condition(const HopfData& H,
                                                        const FittingData& fit) {
    const std::size_t n = H.n;
    const CycScalar zero = H.zero();
    const Tensor3<CycScalar> Dphi = leg1(fit.phi, H.D, zero); // Delta(phi x) slices
    const CycMatrix phi_PN = fit.phi * fit.P_N;
    const CycMatrix PRt = fit.P_R.transpose();
    const CycMatrix PNt = fit.P_N.transpose();
    const CycMatrix phi_PNt = phi_PN.transpose();

    for (std::size_t x = 0; x < n; ++x) {
        const CycMatrix Dx = delta_slice(H.D, x, zero);
        const CycMatrix Dpx = delta_slice(Dphi, x, zero);
        const CycMatrix lhs[4] = {
            fit.P_R * Dx * phi_PNt,
            phi_PN * Dx * PRt,
            fit.P_N * Dx * PNt,
            fit.P_N * Dpx * PNt,
        };
        const CycMatrix rhs[4] = {
            fit.P_R * Dpx * PNt,
            fit.P_N * Dpx * PRt,
            CycMatrix(n, n, zero),
            fit.P_N * Dx * phi_PNt,
        };
        for (int q = 0; q < 4; ++q) {
            if (auto bad = first_nonzero(lhs[q] - rhs[q])) {
                std::ostringstream os;
                os << "comultiplication condition, identity " << (q + 1);
                return ConditionViolation{os.str(), {x + 1, bad->first + 1, bad->second + 1}};
            }
        }
    }
    return std::nullopt;
}

DegenerationReport degenerate_closed_form(const HopfData& H, const CycMatrix& phi) {
    const std::size_t n = H.n;
    if (phi.rows() != n || phi.cols() != n)
        throw std::invalid_argument("degenerate_closed_form: map has the wrong shape");
    const CycScalar zero = H.zero();

    FittingData fit = fitting_decompose(phi);
    DegenerationReport rep;
    rep.mul_violation = check_mul_condition(H, fit);
    rep.comul_violation = check_comul_condition(H, fit);
    rep.mul_condition_holds = !rep.mul_violation;
    rep.comul_condition_holds = !rep.comul_violation;
    if (!rep.mul_condition_holds || !rep.comul_condition_holds) {
        const ConditionViolation& v =
            rep.mul_violation ? *rep.mul_violation : *rep.comul_violation;
        rep.verdict = "no degeneration along this family: " + describe_violation(v);
        return rep;
    }

    // limit multiplication:
    //   psi o P_R o mu o (phi (x) phi) + P_N o mu o (phi (x) id)
    //     + P_N o mu o (id (x) phi) - phi o P_N o mu
    const Tensor3<CycScalar> T1 = leg1(phi, H.C, zero);
    const Tensor3<CycScalar> T2 = leg2(phi, H.C, zero);
    const Tensor3<CycScalar> T12 = leg2(phi, T1, zero);
    const CycMatrix psi_PR = fit.psi * fit.P_R;
    const CycMatrix phi_PN = phi * fit.P_N;
    Tensor3<CycScalar> C0(n, zero);
    add_out(C0, psi_PR, T12, false);
    add_out(C0, fit.P_N, T1, false);
    add_out(C0, fit.P_N, T2, false);
    add_out(C0, phi_PN, H.C, true);

    // limit comultiplication, per basis element x:
    //   (psi P_R (x) psi P_R) Delta(phi x) + (psi P_R (x) P_N) Delta(x)
    //     + (P_N (x) psi P_R) Delta(x)
    const Tensor3<CycScalar> Dphi = leg1(phi, H.D, zero);
    const CycMatrix psi_PRt = psi_PR.transpose();
    const CycMatrix PNt = fit.P_N.transpose();
    Tensor3<CycScalar> D0(n, zero);
    for (std::size_t x = 0; x < n; ++x) {
        const CycMatrix Dx = delta_slice(H.D, x, zero);
        const CycMatrix Dpx = delta_slice(Dphi, x, zero);
        const CycMatrix M = psi_PR * Dpx * psi_PRt + psi_PR * Dx * PNt + fit.P_N * Dx * psi_PRt;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) D0.at(x, j, k) = M.at(j, k);
    }

    finalize_limit(H, std::move(C0), std::move(D0), rep);
    return rep;
}

DegenerationReport degenerate_symbolic(const HopfData& H, const CycMatrix& phi) {
    const std::size_t n = H.n;
    if (phi.rows() != n || phi.cols() != n)
        throw std::invalid_argument("degenerate_symbolic: map has the wrong shape");
    const unsigned m = H.one.conductor();
    const CycScalar cone = CycScalar::one(m);
    const TPoly pzero = tpoly_zero(m);

    // f_t = phi + t*id; its inverse is adj / det with polynomial entries
    PolyInverse inv = char_poly_inverse(phi);
    const long det_ord = inv.det.ord();
    std::vector<TPoly> f(n * n, pzero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(phi.at(i, j))) f[i * n + j] = tpoly_constant(phi.at(i, j));
        f[i * n + i] += tpoly_t(m);
    }

    // transported multiplication, numerators over the common denominator det:
    // stage in e_i, then e_j, then postcompose adj on the output leg
    std::vector<TPoly> U(n * n * n, pzero), V(n * n * n, pzero), P(n * n * n, pzero);
    for (const auto& e : H.C.nonzeros())
        for (std::size_t i = 0; i < n; ++i)
            if (!f[e.i * n + i].is_zero_poly())
                U[(i * n + e.j) * n + e.k] += TPoly::monomial(cone, *e.value, 0) * f[e.i * n + i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t l = 0; l < n; ++l) {
                const TPoly& u = U[(i * n + b) * n + l];
                if (u.is_zero_poly()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!f[b * n + j].is_zero_poly()) V[(i * n + j) * n + l] += u * f[b * n + j];
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const TPoly& v = V[(i * n + j) * n + l];
                if (v.is_zero_poly()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!inv.adj[k * n + l].is_zero_poly())
                        P[(i * n + j) * n + k] += v * inv.adj[k * n + l];
            }

    // transported comultiplication, numerators over det^2
    std::vector<TPoly> X(n * n * n, pzero), Y(n * n * n, pzero), Q(n * n * n, pzero);
    for (const auto& e : H.D.nonzeros())
        for (std::size_t i = 0; i < n; ++i)
            if (!f[e.i * n + i].is_zero_poly())
                X[(i * n + e.j) * n + e.k] += TPoly::monomial(cone, *e.value, 0) * f[e.i * n + i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const TPoly& x = X[(i * n + b) * n + c];
                if (x.is_zero_poly()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!inv.adj[j * n + b].is_zero_poly())
                        Y[(i * n + j) * n + c] += x * inv.adj[j * n + b];
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                const TPoly& y = Y[(i * n + j) * n + c];
                if (y.is_zero_poly()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!inv.adj[k * n + c].is_zero_poly())
                        Q[(i * n + j) * n + k] += y * inv.adj[k * n + c];
            }

    DegenerationReport rep;
    rep.mul_condition_holds = true;
    rep.comul_condition_holds = true;
    const CycScalar zero = H.zero();
    Tensor3<CycScalar> C0(n, zero), D0(n, zero);
    for (std::size_t i = 0; i < n && rep.mul_condition_holds; ++i)
        for (std::size_t j = 0; j < n && rep.mul_condition_holds; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                PolyLimit lim = poly_limit(P[(i * n + j) * n + k], inv.det, 1, det_ord);
                if (lim.is_pole) {
                    rep.mul_condition_holds = false;
                    rep.mul_violation =
                        ConditionViolation{"pole in multiplication entry", {i + 1, j + 1, k + 1}};
                    break;
                }
                C0.at(i, j, k) = lim.value;
            }
    for (std::size_t i = 0; i < n && rep.comul_condition_holds; ++i)
        for (std::size_t j = 0; j < n && rep.comul_condition_holds; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                PolyLimit lim = poly_limit(Q[(i * n + j) * n + k], inv.det, 2, det_ord);
                if (lim.is_pole) {
                    rep.comul_condition_holds = false;
                    rep.comul_violation = ConditionViolation{"pole in comultiplication entry",
                                                             {i + 1, j + 1, k + 1}};
                    break;
                }
                D0.at(i, j, k) = lim.value;
            }

    if (!rep.mul_condition_holds || !rep.comul_condition_holds) {
        const ConditionViolation& v =
            rep.mul_violation ? *rep.mul_violation : *rep.comul_violation;
        rep.verdict = "no degeneration along this family: " +
                      pole_name(rep.mul_violation ? "mul" : "comul", v.index) + " has a pole at t = 0";
        return rep;
    }

    finalize_limit(H, std::move(C0), std::move(D0), rep);
    return rep;
}

DegenerationReport degenerate_both(const HopfData& H, const CycMatrix& phi) {
    DegenerationReport closed = degenerate_closed_form(H, phi);
    DegenerationReport symbolic = degenerate_symbolic(H, phi);
    bool agree = closed.mul_condition_holds == symbolic.mul_condition_holds &&
                 closed.comul_condition_holds == symbolic.comul_condition_holds &&
                 closed.limit.has_value() == symbolic.limit.has_value();
    if (agree && closed.limit && !closed.limit->same_constants(*symbolic.limit)) agree = false;
    closed.oracle_agreement = agree;
    if (!agree) closed.verdict = "closed-form and symbolic routes disagree: " + closed.verdict +
                                 " / " + symbolic.verdict;
    return closed;
}

CycMatrix phi_from_pair(const CycMatrix& v, const CycMatrix& w) {
    auto winv = w.inverse();
    if (!winv) throw std::invalid_argument("phi_from_pair: second map must be invertible");
    return v * *winv;
}

FamilyLimit family_limit(const FamilyData& F) {
    if (!verify_bialgebra(F).pass)
        throw std::invalid_argument(
            "family_limit: tables do not satisfy the bialgebra identities over Q(t)");

    FamilyLimit out;
    const std::size_t n = F.n;
    const unsigned m = F.one.conductor();
    HopfData H;
    H.n = n;
    H.one = CycScalar::one(m);
    const CycScalar zero = CycScalar::zero(m);
    H.C = Tensor3<CycScalar>(n, zero);
    H.D = Tensor3<CycScalar>(n, zero);
    H.xi.assign(n, zero);
    H.meta = F.meta;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                LimitAtZero c = F.C.at(i, j, k).limit_at_zero();
                if (c.is_pole) {
                    out.pole_entry = pole_name("mul", {i + 1, j + 1, k + 1});
                    return out;
                }
                H.C.at(i, j, k) = c.value;
                LimitAtZero d = F.D.at(i, j, k).limit_at_zero();
                if (d.is_pole) {
                    out.pole_entry = pole_name("comul", {i + 1, j + 1, k + 1});
                    return out;
                }
                H.D.at(i, j, k) = d.value;
            }
    for (std::size_t i = 0; i < n; ++i) {
        LimitAtZero x = F.xi[i].limit_at_zero();
        if (x.is_pole) {
            out.pole_entry = pole_name("counit", {i + 1});
            return out;
        }
        H.xi[i] = x.value;
    }
    if (F.S) {
        CycMatrix S(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                LimitAtZero s = F.S->at(i, j).limit_at_zero();
                if (s.is_pole) {
                    out.pole_entry = pole_name("antipode", {i + 1, j + 1});
                    return out;
                }
                S.at(i, j) = s.value;
            }
        H.S = std::move(S);
    }

    if (!verify_bialgebra(H).pass)
        throw std::logic_error("family_limit: specialization lost the bialgebra identities");
    out.limit = std::move(H);
    return out;
}

DegenerationReport graded_degeneration(const HopfData& H, const GradingVector& d) {
    const std::size_t n = H.n;
    if (d.degrees.size() != n)
        throw std::invalid_argument("graded_degeneration: need one degree per basis vector");
    if (d.degrees[0] != 0)
        throw std::invalid_argument("graded_degeneration: the unit must sit in degree 0");
    const auto& deg = d.degrees;

    DegenerationReport rep;
    rep.mul_condition_holds = true;
    rep.comul_condition_holds = true;

    // the degrees define a filtration when no structure constant raises degree
    for (const auto& e : H.C.nonzeros())
        if (deg[e.k] > deg[e.i] + deg[e.j]) {
            rep.mul_condition_holds = false;
            rep.mul_violation = ConditionViolation{"multiplication filtration",
                                                   {e.i + 1, e.j + 1, e.k + 1}};
            break;
        }
    for (const auto& e : H.D.nonzeros())
        if (deg[e.j] + deg[e.k] > deg[e.i]) {
            rep.comul_condition_holds = false;
            rep.comul_violation = ConditionViolation{"comultiplication filtration",
                                                     {e.i + 1, e.j + 1, e.k + 1}};
            break;
        }
    std::optional<ConditionViolation> antipode_violation;
    if (H.S)
        for (std::size_t i = 0; i < n && !antipode_violation; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(H.S->at(i, j)) && deg[i] > deg[j]) {
                    antipode_violation =
                        ConditionViolation{"antipode filtration", {i + 1, j + 1}};
                    break;
                }
    if (!rep.mul_condition_holds || !rep.comul_condition_holds || antipode_violation) {
        const ConditionViolation& v = rep.mul_violation   ? *rep.mul_violation
                                      : rep.comul_violation ? *rep.comul_violation
                                                            : *antipode_violation;
        rep.verdict = "degrees do not define a filtration: " + describe_violation(v);
        return rep;
    }

    // associated graded structure: keep exactly the degree-homogeneous part
    const CycScalar zero = H.zero();
    HopfData G;
    G.n = n;
    G.one = H.one;
    G.C = Tensor3<CycScalar>(n, zero);
    G.D = Tensor3<CycScalar>(n, zero);
    G.xi.assign(n, zero);
    for (const auto& e : H.C.nonzeros())
        if (deg[e.k] == deg[e.i] + deg[e.j]) G.C.at(e.i, e.j, e.k) = *e.value;
    for (const auto& e : H.D.nonzeros())
        if (deg[e.j] + deg[e.k] == deg[e.i]) G.D.at(e.i, e.j, e.k) = *e.value;
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] == 0) G.xi[i] = H.xi[i];
    if (H.S) {
        CycMatrix S(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (deg[i] == deg[j]) S.at(i, j) = H.S->at(i, j);
        G.S = std::move(S);
    }
    G.meta = H.meta;
    if (!G.meta.name.empty()) G.meta.name += " graded";

    if (!verify_hopf(G).pass)
        throw std::logic_error("graded_degeneration: graded tables fail verification");
    rep.unit_found = true;
    rep.counit_found = true;
    rep.antipode_found = G.S.has_value();
    rep.limit = std::move(G);
    rep.verdict = "graded degeneration computed";
    return rep;
}

} // namespace hopfforge
