#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfforge/catalog.hpp"
#include "hopfforge/random_maps.hpp"
#include "hopfforge/scalar_io.hpp"
#include "hopfforge/transport.hpp"
#include "hopfforge/verify.hpp"

using namespace hopfforge;

namespace {

// Hand-built order-2 group algebra on basis (1, g); deliberately written out
// long-hand so it does not depend on the catalog builders it is used to test.
HopfData handmade_z2() {
    CycScalar one = CycScalar::one(1);
    HopfData H = HopfData::zeroed(2, one);
    H.C.at(0, 0, 0) = one; // 1*1
    H.C.at(0, 1, 1) = one; // 1*g
    H.C.at(1, 0, 1) = one; // g*1
    H.C.at(1, 1, 0) = one; // g*g = 1
    H.D.at(0, 0, 0) = one;
    H.D.at(1, 1, 1) = one;
    H.xi[0] = one;
    H.xi[1] = one;
    H.S = CycMatrix::identity(2, one); // both elements are self-inverse
    return H;
}

// two-element monoid 1, e with e*e = e: a bialgebra with no antipode
HopfData idempotent_bialgebra() {
    CycScalar one = CycScalar::one(1);
    HopfData H = HopfData::zeroed(2, one);
    H.C.at(0, 0, 0) = one;
    H.C.at(0, 1, 1) = one;
    H.C.at(1, 0, 1) = one;
    H.C.at(1, 1, 1) = one;
    H.D.at(0, 0, 0) = one;
    H.D.at(1, 1, 1) = one;
    H.xi[0] = one;
    H.xi[1] = one;
    return H;
}

bool family_passed(const VerificationReport& r, const std::string& f) {
    auto it = r.families.find(f);
    REQUIRE(it != r.families.end());
    return it->second.pass;
}

} // namespace

TEST_CASE("handmade order-2 group algebra passes all axiom families") {
    HopfData H = handmade_z2();
    VerificationReport rep = verify_hopf(H);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
    CHECK(rep.families.size() == 10);
    for (const char* f : {"1a", "1b", "2a", "2b", "2c", "3a", "3b", "3c", "4a", "4b"})
        CHECK(family_passed(rep, f));
}

TEST_CASE("killing a product is caught by the counit-character and antipode rows") {
    HopfData H = handmade_z2();
    H.C.at(1, 1, 0) = CycScalar::zero(1); // g*g := 0
    VerificationReport rep = verify_hopf(H);
    CHECK(!rep.pass);
    // associativity and Delta-multiplicativity survive (both sides vanish);
    // the counit character xi(g*g) = xi(g)^2 = 1 does not
    CHECK(family_passed(rep, "1a"));
    CHECK(family_passed(rep, "3a"));
    CHECK(!family_passed(rep, "3c"));
    CHECK(!family_passed(rep, "4a"));
    CHECK(!family_passed(rep, "4b"));
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.family == "3c") {
            CHECK(f.index == std::vector<std::size_t>{2, 2});
            CHECK(f.residual == "-1");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("a corrupted noncommutative product breaks associativity") {
    HopfData H = catalog_get("KS_3");
    // redirect (reflection * rotation) to the identity element
    for (std::size_t k = 0; k < H.n; ++k) H.C.at(3, 1, k) = CycScalar::zero(1);
    H.C.at(3, 1, 0) = CycScalar::one(1);
    VerificationReport rep = verify_bialgebra(H);
    CHECK(!rep.pass);
    CHECK(!family_passed(rep, "1a"));
    // failure tuples are reported in lexicographic order, 1-based
    const AxiomFailure* first = nullptr;
    for (const auto& f : rep.failures)
        if (f.family == "1a") {
            first = &f;
            break;
        }
    REQUIRE(first != nullptr);
    CHECK(first->index.size() == 4);
    CHECK(first->index[0] >= 1);
}

TEST_CASE("unit pinned to the first basis vector") {
    HopfData H = handmade_z2();
    // swap the roles of 1 and g in the multiplication only
    Tensor3<CycScalar> C(2, CycScalar::zero(1));
    CycScalar one = CycScalar::one(1);
    C.at(1, 1, 1) = one; // "g" acts as identity
    C.at(1, 0, 0) = one;
    C.at(0, 1, 0) = one;
    C.at(0, 0, 1) = one;
    H.C = C;
    VerificationReport rep = verify_bialgebra(H);
    CHECK(!family_passed(rep, "1b"));
}

TEST_CASE("missing antipode: bialgebra check still works, antipode check refuses") {
    HopfData H = handmade_z2();
    H.S.reset();
    CHECK(verify_bialgebra(H).pass);
    CHECK_THROWS_AS(verify_antipode(H), std::logic_error);
    VerificationReport rep = verify_hopf(H);
    CHECK(rep.pass);
    CHECK(rep.families.count("4a") == 0);
}

TEST_CASE("transport: identity fixes every entry, singular maps are rejected") {
    HopfData H = catalog_get("T_4");
    CycMatrix id = CycMatrix::identity(4, CycScalar::one(2));
    CHECK(transport(id, H).same_constants(H));

    CycMatrix zero(4, 4, CycScalar::zero(2));
    CHECK_THROWS_AS(transport(zero, H), std::invalid_argument);
}

TEST_CASE("transport is a right action on maps") {
    HopfData H = catalog_get("KZ_4");
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 4; ++rep) {
        CycMatrix f = random_unital_map(rng, 4, 1);
        CycMatrix g = random_unital_map(rng, 4, 1);
        StructureData<CycScalar> lhs = transport(g * f, H);
        StructureData<CycScalar> rhs = transport(f, transport(g, H));
        CHECK(lhs.same_constants(rhs));
    }
}

TEST_CASE("verification survives random unital basis changes") {
    std::mt19937_64 rng(7);
    for (const char* id : {"KZ_4", "T_4", "KS_3"}) {
        HopfData H = catalog_get(id);
        unsigned m = H.one.conductor();
        for (int rep = 0; rep < 3; ++rep) {
            CycMatrix f = random_unital_map(rng, H.n, m);
            HopfData T = transport(f, H);
            VerificationReport r = verify_hopf(T);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("scaling the nilpotent side of T_4 is an automorphism") {
    HopfData H = catalog_get("T_4");
    CycMatrix f = CycMatrix::identity(4, CycScalar::one(2));
    CycScalar s = CycScalar::from_int(2, 3);
    f.at(2, 2) = s; // x -> 3x
    f.at(3, 3) = s; // yx -> 3yx
    CHECK(transport(f, H).same_constants(H));
}

TEST_CASE("dual of the order-2 group algebra") {
    HopfData H = handmade_z2();
    Normalized<CycScalar> d = dual(H);
    CHECK(verify_hopf(d.data).pass);

    // commutative and cocommutative, like the original
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(d.data.C.at(i, j, k) == d.data.C.at(j, i, k));
                CHECK(d.data.D.at(i, j, k) == d.data.D.at(i, k, j));
            }

    // explicit isomorphism onto the group algebra: 1 -> u, g -> u - 2 e'_2
    // (the normalized dual basis consists of the unit and an idempotent)
    CycMatrix f(2, 2, CycScalar::zero(1));
    f.at(0, 0) = CycScalar::one(1);
    f.at(0, 1) = CycScalar::one(1);
    f.at(1, 1) = CycScalar::from_int(1, -2);
    CHECK(check_isomorphism(f, d.data, H));
}

TEST_CASE("dualizing twice returns to start via the recorded transports") {
    for (const char* id : {"KZ_2", "KZ_3", "KS_3", "T_4", "A_C4_doubleprime"}) {
        HopfData H = catalog_get(id);
        Normalized<CycScalar> d1 = dual(H);
        Normalized<CycScalar> d2 = dual(d1.data);
        CycMatrix f = double_dual_map(d1.g, d2.g);
        CHECK(check_isomorphism(f, d2.data, H));
    }
}

TEST_CASE("antipode recovery matches the stored antipode") {
    for (const char* id : {"KZ_3", "T_4", "KS_3", "A_1"}) {
        HopfData H = catalog_get(id);
        CycMatrix stored = *H.S;
        H.S.reset();
        auto S = compute_antipode(H);
        REQUIRE(S.has_value());
        CHECK(*S == stored);
    }
}

TEST_CASE("a bialgebra with a non-invertible grouplike has no antipode") {
    HopfData H = idempotent_bialgebra();
    CHECK(verify_bialgebra(H).pass);
    CHECK(!compute_antipode(H).has_value());
}

TEST_CASE("normalize_unit: pivot rules and error cases") {
    HopfData H = handmade_z2();

    // move the unit to e_2 by transporting along the basis swap
    RawStructure<CycScalar> raw;
    raw.n = 2;
    raw.one = H.one;
    raw.C = H.C;
    raw.D = H.D;
    raw.unit = {CycScalar::one(1), CycScalar::zero(1)};
    raw.xi = H.xi;
    raw.S = H.S;

    CycMatrix swap(2, 2, CycScalar::zero(1));
    swap.at(0, 1) = CycScalar::one(1);
    swap.at(1, 0) = CycScalar::one(1);
    RawStructure<CycScalar> moved = transport_raw(swap, raw);
    CHECK(is_zero(moved.unit[0]));
    CHECK(moved.unit[1].is_one());

    Normalized<CycScalar> norm = normalize_unit(moved);
    CHECK(verify_hopf(norm.data).pass);
    // pivot p = 2: g sends e_1 -> u = e_2 and e_2 -> e_1
    CHECK(norm.g == swap);

    // unit already at e_1: identity transport
    Normalized<CycScalar> same = normalize_unit(raw);
    CHECK(same.g == CycMatrix::identity(2, CycScalar::one(1)));
    CHECK(same.data.same_constants(H));

    // a non-unit is rejected
    raw.unit = {CycScalar::one(1), CycScalar::one(1)};
    CHECK_THROWS_AS(normalize_unit(raw), std::invalid_argument);
}

TEST_CASE("check_isomorphism is exact equality after transport") {
    HopfData H1 = catalog_get("KZ_4");
    HopfData H2 = catalog_get("KZ_2xZ_2");
    CycMatrix id = CycMatrix::identity(4, CycScalar::one(1));
    CHECK(check_isomorphism(id, H1, H1));
    CHECK(!check_isomorphism(id, H1, H2));
}
