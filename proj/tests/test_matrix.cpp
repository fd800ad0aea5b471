#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfforge/matrix.hpp"
#include "hopfforge/random_maps.hpp"
#include "hopfforge/scalar_io.hpp"

using namespace hopfforge;

namespace {

CycMatrix mat2(int a, int b, int c, int d) {
    CycMatrix M(2, 2, CycScalar::zero(1));
    M.at(0, 0) = CycScalar::from_int(1, a);
    M.at(0, 1) = CycScalar::from_int(1, b);
    M.at(1, 0) = CycScalar::from_int(1, c);
    M.at(1, 1) = CycScalar::from_int(1, d);
    return M;
}

} // namespace

TEST_CASE("inverse and determinant on a fixed 2x2") {
    CycMatrix M = mat2(1, 2, 3, 4);
    CHECK(to_string(M.determinant()) == "-2");

    auto inv = M.inverse();
    REQUIRE(inv.has_value());
    CHECK(to_string(inv->at(0, 0)) == "-2");
    CHECK(to_string(inv->at(0, 1)) == "1");
    CHECK(to_string(inv->at(1, 0)) == "3/2");
    CHECK(to_string(inv->at(1, 1)) == "-1/2");

    CHECK(*inv * M == CycMatrix::identity(2, CycScalar::one(1)));
    CHECK(M * *inv == CycMatrix::identity(2, CycScalar::one(1)));
}

TEST_CASE("singular matrices: rank, kernel, no inverse") {
    CycMatrix M = mat2(1, 2, 2, 4);
    CHECK(M.rank() == 1);
    CHECK(!M.inverse().has_value());
    CHECK(is_zero(M.determinant()));

    auto ker = M.kernel_basis();
    REQUIRE(ker.size() == 1);
    // canonical kernel vector: free column set to 1
    CHECK(to_string(ker[0][0]) == "-2");
    CHECK(to_string(ker[0][1]) == "1");

    // kernel vectors really are annihilated
    auto img = M * ker[0];
    CHECK(is_zero(img[0]));
    CHECK(is_zero(img[1]));
}

TEST_CASE("solve: consistent and inconsistent systems") {
    CycMatrix M = mat2(1, 2, 2, 4);
    std::vector<CycScalar> b{CycScalar::from_int(1, 3), CycScalar::from_int(1, 6)};
    auto x = CycMatrix::solve(M, b);
    REQUIRE(x.has_value());
    auto Mx = M * *x;
    CHECK(Mx[0] == b[0]);
    CHECK(Mx[1] == b[1]);

    std::vector<CycScalar> bad{CycScalar::from_int(1, 3), CycScalar::from_int(1, 5)};
    CHECK(!CycMatrix::solve(M, bad).has_value());
}

TEST_CASE("random invertible matrices over cyclotomic fields") {
    for (unsigned m : {1u, 4u, 3u}) {
        std::mt19937_64 rng(101 + m);
        for (int rep = 0; rep < 8; ++rep) {
            std::size_t n = 1 + rep % 5;
            auto M = random_invertible_map(rng, n, m);
            auto inv = M.inverse();
            REQUIRE(inv.has_value());
            CHECK(*inv * M == CycMatrix::identity(n, CycScalar::one(m)));

            auto N = random_invertible_map(rng, n, m);
            CHECK(M.determinant() * N.determinant() == (M * N).determinant());
            CHECK((M * N).transpose() == N.transpose() * M.transpose());
        }
    }
}

TEST_CASE("rank plus nullity over a cyclotomic field") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 12; ++rep) {
        std::size_t n = 4;
        std::size_t r = rep % 4;
        auto M = random_singular_map(rng, n, 4, r);
        CHECK(M.rank() == r);
        auto ker = M.kernel_basis();
        CHECK(ker.size() == n - r);
        for (const auto& v : ker) {
            auto img = M * v;
            for (const auto& c : img) CHECK(is_zero(c));
        }
    }
}

TEST_CASE("unital random maps fix e_1") {
    std::mt19937_64 rng(99);
    auto f = random_unital_map(rng, 5, 4);
    for (std::size_t i = 0; i < 5; ++i) {
        if (i == 0)
            CHECK(f.at(i, 0).is_one());
        else
            CHECK(is_zero(f.at(i, 0)));
    }
    CHECK(!is_zero(f.determinant()));
}

TEST_CASE("matrices of rational functions") {
    RatFunc z = RatFunc::zero(1), one = RatFunc::one(1), t = RatFunc::t(1);

    RatMatrix U(2, 2, z);
    U.at(0, 0) = one;
    U.at(0, 1) = t;
    U.at(1, 1) = one;
    auto inv = U.inverse();
    REQUIRE(inv.has_value());
    CHECK(to_string(inv->at(0, 1)) == "-t");
    CHECK(*inv * U == RatMatrix::identity(2, one));

    RatMatrix V(2, 2, z);
    V.at(0, 0) = one;
    V.at(0, 1) = t;
    V.at(1, 0) = t;
    V.at(1, 1) = t * t;
    CHECK(is_zero(V.determinant()));
    CHECK(V.rank() == 1);
    auto ker = V.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(to_string(ker[0][0]) == "-t");
    CHECK(to_string(ker[0][1]) == "1");
}

TEST_CASE("matrix times vector") {
    CycMatrix M = mat2(0, 1, 1, 0);
    std::vector<CycScalar> v{CycScalar::from_int(1, 2), CycScalar::from_int(1, 5)};
    auto w = M * v;
    CHECK(to_string(w[0]) == "5");
    CHECK(to_string(w[1]) == "2");
}
