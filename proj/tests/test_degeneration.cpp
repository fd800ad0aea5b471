#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfforge/catalog.hpp"
#include "hopfforge/degeneration.hpp"
#include "hopfforge/random_maps.hpp"
#include "hopfforge/transport.hpp"
#include "hopfforge/verify.hpp"

using namespace hopfforge;

namespace {

CycMatrix span_projector(std::size_t n, std::size_t r, unsigned m) {
    CycMatrix p(n, n, CycScalar::zero(m));
    for (std::size_t i = 0; i < r; ++i) p.at(i, i) = CycScalar::one(m);
    return p;
}

bool is_projector(const CycMatrix& P) { return P * P == P; }

bool commutes(const CycMatrix& A, const CycMatrix& B) { return A * B == B * A; }

void check_fitting_invariants(const CycMatrix& phi) {
    const std::size_t n = phi.rows();
    const CycScalar one = one_like(phi.at(0, 0));
    const CycMatrix id = CycMatrix::identity(n, one);
    FittingData fit = fitting_decompose(phi);

    CHECK(fit.P_R + fit.P_N == id);
    CHECK(is_projector(fit.P_R));
    CHECK(is_projector(fit.P_N));
    CHECK((fit.P_R * fit.P_N).is_zero_matrix());
    CHECK(commutes(phi, fit.P_R));
    CHECK(commutes(phi, fit.P_N));
    CHECK(fit.psi * phi == fit.P_R);
    CHECK(phi * fit.psi == fit.P_R);

    // q is the least power of phi killing the kernel-side projector
    CycMatrix M = fit.P_N;
    for (std::size_t s = 0; s < fit.q; ++s) {
        CHECK(!M.is_zero_matrix());
        M = phi * M;
    }
    CHECK(M.is_zero_matrix());
}

} // namespace

TEST_CASE("fitting decomposition on the stock shapes") {
    const CycScalar one = CycScalar::one(1);
    const CycScalar zero = CycScalar::zero(1);

    // invertible: kernel side empty, psi inverts phi outright
    CycMatrix inv(3, 3, zero);
    inv.at(0, 0) = CycScalar::from_int(1, 2);
    inv.at(0, 2) = one;
    inv.at(1, 1) = CycScalar::from_int(1, -1);
    inv.at(2, 0) = one;
    FittingData fi = fitting_decompose(inv);
    CHECK(fi.q == 0);
    CHECK(fi.P_R == CycMatrix::identity(3, one));
    CHECK(fi.P_N.is_zero_matrix());
    CHECK(fi.psi * inv == CycMatrix::identity(3, one));

    // single nilpotent Jordan block: image side empty, q = n
    CycMatrix jb(4, 4, zero);
    for (std::size_t i = 0; i + 1 < 4; ++i) jb.at(i, i + 1) = one;
    FittingData fj = fitting_decompose(jb);
    CHECK(fj.q == 4);
    CHECK(fj.P_R.is_zero_matrix());
    CHECK(fj.P_N == CycMatrix::identity(4, one));
    CHECK(fj.psi.is_zero_matrix());

    // already split diagonal
    CycMatrix dg(4, 4, zero);
    dg.at(0, 0) = one;
    dg.at(1, 1) = one;
    FittingData fd = fitting_decompose(dg);
    CHECK(fd.q == 1);
    CHECK(fd.P_R == dg);
    CHECK(fd.psi == dg);

    CHECK_THROWS_AS(fitting_decompose(CycMatrix(2, 3, zero)), std::invalid_argument);
}

TEST_CASE("fitting invariants hold for seeded random maps") {
    std::mt19937_64 rng(seed_from_env(0xf177));
    for (int round = 0; round < 12; ++round) {
        std::uniform_int_distribution<std::size_t> dim(2, 7);
        std::size_t n = dim(rng);
        std::uniform_int_distribution<unsigned> cond(0, 2);
        unsigned m = cond(rng) == 0 ? 3 : 1;
        std::uniform_int_distribution<std::size_t> rank(0, n);
        std::size_t r = rank(rng);
        CycMatrix phi = r == 0   ? CycMatrix(n, n, CycScalar::zero(m))
                        : r == n ? random_invertible_map(rng, n, m)
                                 : random_singular_map(rng, n, m, r);
        check_fitting_invariants(phi);
    }
}

TEST_CASE("degeneration conditions on curated pairs") {
    // invertible map: kernel side empty, both conditions vacuous
    HopfData K4 = catalog_get("KZ_4");
    std::mt19937_64 rng(seed_from_env(0xc0de));
    CycMatrix f = random_invertible_map(rng, 4, 1);
    FittingData fit = fitting_decompose(f);
    CHECK(!check_mul_condition(K4, fit));
    CHECK(!check_comul_condition(K4, fit));

    // dim-8 family at alpha = 1 with the projector onto the group span
    HopfData H1 = x2_point(4, Rational(1));
    FittingData fp = fitting_decompose(span_projector(8, 4, 1));
    CHECK(!check_mul_condition(H1, fp));
    CHECK(!check_comul_condition(H1, fp));

    // zero map on the 4-dimensional Taft algebra: the kernel-side projector
    // is the identity, so Delta must vanish, and it does not
    HopfData T4 = taft_algebra(2);
    FittingData fz = fitting_decompose(CycMatrix(4, 4, CycScalar::zero(2)));
    CHECK(!check_mul_condition(T4, fz));
    auto cv = check_comul_condition(T4, fz);
    REQUIRE(cv.has_value());
    CHECK(cv->where == "comultiplication condition, identity 3");
    CHECK(cv->index == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("closed-form limit along the identity is the input") {
    for (const char* id : {"KZ_3", "KS_3", "T_4"}) {
        HopfData H = catalog_get(id);
        CycMatrix id_map = CycMatrix::identity(H.n, one_like(H.one));
        DegenerationReport rep = degenerate_closed_form(H, id_map);
        CHECK(rep.mul_condition_holds);
        CHECK(rep.comul_condition_holds);
        CHECK(rep.unit_found);
        CHECK(rep.counit_found);
        CHECK(rep.antipode_found);
        REQUIRE(rep.limit.has_value());
        CHECK(rep.limit->same_constants(H));
        CHECK(rep.verdict == "degeneration exists");
    }
}

TEST_CASE("projector degenerations of the two x-extension families") {
    HopfData A8 = x2_point(4, Rational(1));
    HopfData A8_0 = x2_point(4, Rational(0));
    DegenerationReport r8 = degenerate_both(A8, span_projector(8, 4, 1));
    REQUIRE(r8.oracle_agreement.has_value());
    CHECK(*r8.oracle_agreement);
    REQUIRE(r8.limit.has_value());
    CHECK(r8.limit->same_constants(A8_0));
    CHECK(verify_hopf(*r8.limit).pass);

    HopfData A12 = x2_point(6, Rational(1));
    HopfData A12_0 = x2_point(6, Rational(0));
    DegenerationReport r12 = degenerate_both(A12, span_projector(12, 6, 1));
    REQUIRE(r12.oracle_agreement.has_value());
    CHECK(*r12.oracle_agreement);
    REQUIRE(r12.limit.has_value());
    CHECK(r12.limit->same_constants(A12_0));

    // the antipode of the limit is the one the input carried
    CHECK(*r8.limit->S == *A8_0.S);
    CHECK(*r12.limit->S == *A12_0.S);
}

TEST_CASE("symbolic route flags the Taft collapse as a comultiplication pole") {
    HopfData T4 = taft_algebra(2);
    CycMatrix z(4, 4, CycScalar::zero(2));
    DegenerationReport rep = degenerate_symbolic(T4, z);
    CHECK(rep.mul_condition_holds); // f_t = t id scales products by t
    CHECK(!rep.comul_condition_holds);
    REQUIRE(rep.comul_violation.has_value());
    CHECK(rep.comul_violation->index == std::vector<std::size_t>{1, 1, 1});
    CHECK(!rep.limit.has_value());
    CHECK(rep.verdict.find("no degeneration along this family") != std::string::npos);
    CHECK(rep.verdict.find("comul[1,1,1]") != std::string::npos);

    DegenerationReport both = degenerate_both(T4, z);
    REQUIRE(both.oracle_agreement.has_value());
    CHECK(*both.oracle_agreement);
}

TEST_CASE("oracle equivalence on seeded random pairs") {
    std::mt19937_64 rng(seed_from_env(0x0dd5));
    const char* ids[] = {"KZ_2", "KZ_3", "KZ_4", "KZ_2xZ_2", "T_4",
                         "KZ_6", "KS_3", "KD_4", "A_C4_prime", "A_C4_doubleprime"};
    int with_limit = 0, without = 0;
    for (const char* id : ids) {
        HopfData H = catalog_get(id);
        const unsigned m = H.one.conductor();
        for (int round = 0; round < 4; ++round) {
            CycMatrix phi(H.n, H.n, CycScalar::zero(m));
            switch (round) {
                case 0: break; // zero map
                case 1: phi = random_invertible_map(rng, H.n, m); break;
                case 2: {
                    std::uniform_int_distribution<std::size_t> rank(1, H.n - 1);
                    phi = random_singular_map(rng, H.n, m, rank(rng));
                    break;
                }
                case 3: {
                    std::uniform_int_distribution<std::size_t> rank(1, H.n);
                    phi = span_projector(H.n, rank(rng), m);
                    break;
                }
            }
            DegenerationReport closed = degenerate_closed_form(H, phi);
            DegenerationReport symbolic = degenerate_symbolic(H, phi);

            // pole in a table entry iff the matching condition fails
            CHECK(closed.mul_condition_holds == symbolic.mul_condition_holds);
            CHECK(closed.comul_condition_holds == symbolic.comul_condition_holds);
            CHECK(closed.limit.has_value() == symbolic.limit.has_value());
            if (closed.limit) {
                ++with_limit;
                CHECK(closed.limit->same_constants(*symbolic.limit));
                CHECK(verify_hopf(*closed.limit).pass);
                CHECK(closed.unit_found);
                CHECK(closed.counit_found);
                CHECK(closed.antipode_found);
            } else {
                ++without;
            }
        }
    }
    // the draw must exercise both outcomes to mean anything
    CHECK(with_limit >= 10);
    CHECK(without >= 10);
}

TEST_CASE("pair reduction to the normal form") {
    std::mt19937_64 rng(seed_from_env(0x9a17));
    CycMatrix w = random_invertible_map(rng, 5, 1);
    CycMatrix v = random_map(rng, 5, 1);
    CycMatrix phi = phi_from_pair(v, w);
    CHECK(phi * w == v);
    CHECK(phi_from_pair(w, w) == CycMatrix::identity(5, CycScalar::one(1)));
    CHECK_THROWS_AS(phi_from_pair(v, CycMatrix(5, 5, CycScalar::zero(1))),
                    std::invalid_argument);
}

TEST_CASE("family limits of the generic x-extension families") {
    FamilyLimit f8 = family_limit(x2_generic(4));
    REQUIRE(f8.limit.has_value());
    CHECK(f8.limit->same_constants(x2_point(4, Rational(0))));
    CHECK(f8.pole_entry.empty());
    CHECK(verify_hopf(*f8.limit).pass);

    FamilyLimit f12 = family_limit(x2_generic(6));
    REQUIRE(f12.limit.has_value());
    CHECK(f12.limit->same_constants(x2_point(6, Rational(0))));
}

TEST_CASE("entry-wise dual family tends to the dual of the limit") {
    // dual first, then limit
    FamilyData F = x2_generic(6);
    FamilyLimit dual_then_limit = family_limit(dual(F).data);
    REQUIRE(dual_then_limit.limit.has_value());

    // limit first, then dual
    HopfData B1 = dual(x2_point(6, Rational(0))).data;
    CHECK(dual_then_limit.limit->same_constants(B1));
    CHECK(B1.same_constants(catalog_get("B_1")));
}

TEST_CASE("family with a pole at zero is rejected with the entry named") {
    // alpha = 1/t satisfies every defining identity over Q(t) but the
    // multiplication table blows up at t = 0
    RatFunc alpha = RatFunc::one(1) / RatFunc::t(1);
    FamilyData F = x2_structure<RatFunc>(4, alpha);
    FamilyLimit fl = family_limit(F);
    CHECK(!fl.limit.has_value());
    CHECK(fl.pole_entry == "mul[5,5,1]"); // x * x hits alpha * 1

    // breaking an identity in t is a usage error, not a pole verdict
    FamilyData bad = family_constant(catalog_get("KZ_2"));
    bad.C.at(0, 0, 0) += RatFunc::t(1);
    CHECK_THROWS_AS(family_limit(bad), std::invalid_argument);
}

TEST_CASE("graded degeneration with all degrees zero changes nothing") {
    for (const char* id : {"KZ_4", "T_4", "KS_3"}) {
        HopfData H = catalog_get(id);
        DegenerationReport rep = graded_degeneration(H, GradingVector{
                                                            std::vector<std::size_t>(H.n, 0)});
        REQUIRE(rep.limit.has_value());
        CHECK(rep.limit->same_constants(H));
    }
}

TEST_CASE("Taft algebra is a fixed point of its x-degree grading") {
    HopfData T4 = taft_algebra(2);
    DegenerationReport rep = graded_degeneration(T4, GradingVector{{0, 0, 1, 1}});
    REQUIRE(rep.limit.has_value());
    CHECK(rep.limit->same_constants(T4));
}

TEST_CASE("grading the x-extension families kills the x^2 relation") {
    HopfData A8 = x2_point(4, Rational(1));
    GradingVector d8{{0, 0, 0, 0, 1, 1, 1, 1}};
    DegenerationReport r8 = graded_degeneration(A8, d8);
    REQUIRE(r8.limit.has_value());
    CHECK(r8.limit->same_constants(x2_point(4, Rational(0))));
    CHECK(r8.unit_found);
    CHECK(r8.counit_found);
    CHECK(r8.antipode_found);

    HopfData A12 = x2_point(6, Rational(1));
    GradingVector d12{{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1}};
    DegenerationReport r12 = graded_degeneration(A12, d12);
    REQUIRE(r12.limit.has_value());
    CHECK(r12.limit->same_constants(x2_point(6, Rational(0))));

    // the output is degree-homogeneous
    const HopfData& G = *r8.limit;
    for (const auto& e : G.C.nonzeros()) CHECK(d8.degrees[e.k] == d8.degrees[e.i] + d8.degrees[e.j]);
    for (const auto& e : G.D.nonzeros()) CHECK(d8.degrees[e.i] == d8.degrees[e.j] + d8.degrees[e.k]);
    for (std::size_t i = 0; i < G.n; ++i)
        if (!is_zero(G.xi[i])) CHECK(d8.degrees[i] == 0);
}

TEST_CASE("graded route matches the diagonal symbolic family") {
    struct Probe {
        const char* id;
        std::vector<std::size_t> degrees;
    };
    const Probe probes[] = {
        {"A_C4_doubleprime", {0, 0, 0, 0, 1, 1, 1, 1}},
        {"T_4", {0, 0, 1, 1}},
        {"A_C4_prime", {0, 0, 0, 0, 2, 2, 2, 2}},
    };
    for (const auto& p : probes) {
        HopfData H = catalog_get(p.id);
        DegenerationReport rep = graded_degeneration(H, GradingVector{p.degrees});
        REQUIRE(rep.limit.has_value());

        // independent route: transport by diag(t^{d_i}) and take entry limits
        const unsigned m = H.one.conductor();
        FamilyData fam = family_constant(H);
        RatMatrix f(H.n, H.n, RatFunc::zero(m));
        for (std::size_t i = 0; i < H.n; ++i) {
            RatFunc p_i = RatFunc::one(m);
            for (std::size_t s = 0; s < p.degrees[i]; ++s) p_i *= RatFunc::t(m);
            f.at(i, i) = p_i;
        }
        FamilyData moved = transport(f, fam);
        FamilyLimit fl = family_limit(moved);
        REQUIRE(fl.limit.has_value());
        CHECK(fl.limit->same_constants(*rep.limit));
    }
}

TEST_CASE("degree vectors that are not filtrations are rejected with a tuple") {
    HopfData K4 = catalog_get("KZ_4");
    DegenerationReport rep = graded_degeneration(K4, GradingVector{{0, 1, 0, 0}});
    CHECK(!rep.limit.has_value());
    CHECK(!rep.comul_condition_holds);
    REQUIRE(rep.comul_violation.has_value());
    CHECK(rep.comul_violation->where == "comultiplication filtration");
    CHECK(rep.comul_violation->index == std::vector<std::size_t>{2, 2, 2});

    // grading a grouplike positively breaks the coalgebra side: Delta(g)
    // lands in degree 2 while g sits in degree 1
    HopfData K2 = catalog_get("KZ_2");
    DegenerationReport rm = graded_degeneration(K2, GradingVector{{0, 1}});
    CHECK(!rm.limit.has_value());
    CHECK(!rm.comul_condition_holds);

    // a degree-raising antipode table is caught by the scan: plant an
    // x-component into S(1) while the product and coproduct tables are fine
    HopfData T4 = taft_algebra(2);
    CycMatrix S = *T4.S;
    S.at(2, 0) = CycScalar::one(2);
    T4.S = S;
    DegenerationReport ra = graded_degeneration(T4, GradingVector{{0, 0, 1, 1}});
    CHECK(!ra.limit.has_value());
    CHECK(ra.verdict.find("antipode filtration") != std::string::npos);
    CHECK(ra.mul_condition_holds);
    CHECK(ra.comul_condition_holds);

    CHECK_THROWS_AS(graded_degeneration(K4, GradingVector{{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graded_degeneration(K4, GradingVector{{1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("Taft algebra is fixed by its group-span projector") {
    // x^2 is already zero, so collapsing the x side changes nothing: the
    // degeneration along the projector reproduces the input exactly
    HopfData T4 = taft_algebra(2);
    DegenerationReport rep = degenerate_both(T4, span_projector(4, 2, 2));
    REQUIRE(rep.oracle_agreement.has_value());
    CHECK(*rep.oracle_agreement);
    REQUIRE(rep.limit.has_value());
    CHECK(rep.limit->same_constants(T4));
}
