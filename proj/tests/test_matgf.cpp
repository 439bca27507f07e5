#include <doctest.h>

#include <random>

#include "qtpc/matgf.hpp"

using namespace qtpc;

namespace {

GfMatrix random_matrix(const Field& f, int r, int c, std::mt19937_64& rng) {
    GfMatrix m(f, r, c);
    std::uniform_int_distribution<gf_elem> dist(0, static_cast<gf_elem>(f.q() - 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, dist(rng));
    return m;
}

GfMatrix random_invertible(const Field& f, int n, std::mt19937_64& rng) {
    for (;;) {
        GfMatrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST_CASE("matmul, transpose, dagger") {
    const Field& f2 = Field::get(1);
    auto h = GfMatrix::from_rows(f2, {{1, 1, 0}, {1, 0, 1}});
    auto prod = matmul(h, transpose(h));
    CHECK(prod == GfMatrix::from_rows(f2, {{0, 1}, {1, 0}}));

    auto id = GfMatrix::identity(f2, 2);
    CHECK(matmul(id, h) == h);

    const Field& f4 = Field::get(2);
    auto a = GfMatrix::from_rows(f4, {{gf4_omega}});
    CHECK(dagger(a) == GfMatrix::from_rows(f4, {{gf4_omega2}}));
    CHECK_THROWS_AS(dagger(GfMatrix::from_rows(f2, {{1}})), std::invalid_argument);
}

TEST_CASE("dagger is an involution and antihomomorphism") {
    std::mt19937_64 rng(11);
    const Field& f4 = Field::get(2);
    for (int t = 0; t < 10; ++t) {
        auto a = random_matrix(f4, 3, 4, rng);
        auto b = random_matrix(f4, 4, 2, rng);
        CHECK(dagger(dagger(a)) == a);
        CHECK(dagger(matmul(a, b)) == matmul(dagger(b), dagger(a)));
    }
}

TEST_CASE("rank and null space") {
    const Field& f2 = Field::get(1);
    CHECK(null_space(GfMatrix::identity(f2, 4)).rows() == 0);

    // [7,4] Hamming parity check has rank 3
    auto ham = GfMatrix::from_rows(f2, {{0, 0, 0, 1, 1, 1, 1},
                                        {0, 1, 1, 0, 0, 1, 1},
                                        {1, 0, 1, 0, 1, 0, 1}});
    CHECK(rank(ham) == 3);

    auto ns = null_space(GfMatrix::from_rows(f2, {{1, 1, 1}}));
    CHECK(ns.rows() == 2);
    for (int r = 0; r < ns.rows(); ++r) {
        int wt = 0;
        for (int c = 0; c < 3; ++c) wt += ns.at(r, c);
        CHECK(wt % 2 == 0);
    }

    std::mt19937_64 rng(5);
    for (const Field* f : {&Field::get(1), &Field::get(2), &Field::get(3)}) {
        auto a = random_matrix(*f, 4, 7, rng);
        auto ns2 = null_space(a);
        CHECK(rank(a) + ns2.rows() == a.cols());
        if (ns2.rows()) {
            CHECK(matmul(a, transpose(ns2)).is_zero());
            CHECK(rank(ns2) == ns2.rows());
        }
    }
}

TEST_CASE("kronecker product") {
    const Field& f2 = Field::get(1);
    auto b = GfMatrix::from_rows(f2, {{1, 0, 1}});
    CHECK(kron(GfMatrix::from_rows(f2, {{1}}), b) == b);
    CHECK(kron(GfMatrix::from_rows(f2, {{1, 1}}), b) ==
          GfMatrix::from_rows(f2, {{1, 0, 1, 1, 0, 1}}));
    auto big = kron(GfMatrix(f2, 2, 3), GfMatrix(f2, 4, 5));
    CHECK(big.rows() == 8);
    CHECK(big.cols() == 15);
}

TEST_CASE("mixed-product identity (A kron B)(C kron D) = AC kron BD") {
    std::mt19937_64 rng(17);
    for (const Field* f : {&Field::get(1), &Field::get(2)}) {
        auto a = random_matrix(*f, 2, 3, rng), c = random_matrix(*f, 3, 2, rng);
        auto b = random_matrix(*f, 2, 2, rng), d = random_matrix(*f, 2, 3, rng);
        CHECK(matmul(kron(a, b), kron(c, d)) == kron(matmul(a, c), matmul(b, d)));
    }
}

TEST_CASE("solve_left_inverse") {
    const Field& f2 = Field::get(1);
    auto id = GfMatrix::identity(f2, 3);
    CHECK(solve_left_inverse(id) == id);
    auto swp = GfMatrix::from_rows(f2, {{0, 1}, {1, 0}});
    CHECK(solve_left_inverse(swp) == swp);
    auto tri = GfMatrix::from_rows(f2, {{1, 1}, {0, 1}});
    CHECK(solve_left_inverse(tri) == tri);
    CHECK_THROWS_AS(solve_left_inverse(GfMatrix(f2, 2, 2)), std::domain_error);

    std::mt19937_64 rng(23);
    for (const Field* f : {&Field::get(1), &Field::get(3)}) {
        auto s = random_invertible(*f, 4, rng);
        CHECK(matmul(solve_left_inverse(s), s) == GfMatrix::identity(*f, 4));
    }
}

TEST_CASE("companion matrices") {
    const Field& f4 = Field::get(2);
    CHECK(companion(f4, gf4_omega) ==
          GfMatrix::from_rows(Field::get(1), {{0, 1}, {1, 1}}));
    CHECK(companion(f4, 1) == GfMatrix::identity(Field::get(1), 2));
    CHECK(companion(f4, gf4_omega2) ==
          GfMatrix::from_rows(Field::get(1), {{1, 1}, {1, 0}}));
    CHECK(companion(f4, 0).is_zero());
}

TEST_CASE("companion representation is a ring homomorphism") {
    for (int m : {2, 3, 4}) {
        const Field& f = Field::get(m);
        for (gf_elem a = 0; a < f.q(); ++a)
            for (gf_elem b = 0; b < f.q(); ++b) {
                CHECK(matmul(companion(f, a), companion(f, b)) ==
                      companion(f, f.mul(a, b)));
                CHECK(matadd(companion(f, a), companion(f, b)) ==
                      companion(f, Field::add(a, b)));
            }
    }
}

TEST_CASE("companion_expand") {
    const Field& f4 = Field::get(2);
    CHECK(companion_expand(GfMatrix(f4, 2, 3), false).is_zero());
    auto h = GfMatrix::from_rows(f4, {{gf4_omega}});
    CHECK(companion_expand(h, false) ==
          GfMatrix::from_rows(Field::get(1), {{0, 1}, {1, 1}}));
    CHECK(companion_expand(h, true) ==
          transpose(GfMatrix::from_rows(Field::get(1), {{0, 1}, {1, 1}})));
}

TEST_CASE("companion_expand commutes with products (untransposed)") {
    std::mt19937_64 rng(31);
    for (int m : {2, 3}) {
        const Field& f = Field::get(m);
        for (int t = 0; t < 6; ++t) {
            auto h1 = random_matrix(f, 2, 3, rng);
            auto h2 = random_matrix(f, 3, 2, rng);
            CHECK(companion_expand(matmul(h1, h2), false) ==
                  matmul(companion_expand(h1, false), companion_expand(h2, false)));
        }
    }
}

TEST_CASE("psi matrix expansion and inverse") {
    const Field& f4 = Field::get(2);
    SubfieldMap map(f4, Field::get(1));
    auto one = GfMatrix::from_rows(f4, {{1}});
    auto e = psi_matrix(one, map);
    CHECK(e == GfMatrix::from_rows(Field::get(1), {{1}, {0}}));

    // psi^{-1} of [[1,1,0],[1,0,1]] = [1+a, 1, a] over GF(4)
    auto h = GfMatrix::from_rows(Field::get(1), {{1, 1, 0}, {1, 0, 1}});
    auto packed = psi_inv_matrix(h, map);
    CHECK(packed == GfMatrix::from_rows(f4, {{gf4_omega2, 1, gf4_omega}}));

    std::mt19937_64 rng(41);
    const Field& f16 = Field::get(4);
    SubfieldMap m16(f16, Field::get(1));
    auto rnd = random_matrix(f16, 2, 5, rng);
    // roundtrip row-by-row: psi_inv(psi(H)) = H
    for (int i = 0; i < rnd.rows(); ++i) {
        GfMatrix rowm(f16, 1, 5);
        for (int j = 0; j < 5; ++j) rowm.set(0, j, rnd.at(i, j));
        CHECK(psi_inv_matrix(psi_matrix(rowm, m16), m16) == rowm);
    }
    CHECK_THROWS_AS(psi_inv_matrix(GfMatrix(Field::get(1), 3, 5), m16),
                    std::invalid_argument);
}

TEST_CASE("in_row_space") {
    const Field& f2 = Field::get(1);
    auto a = GfMatrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}});
    std::vector<gf_elem> v1 = {1, 0, 1}, v2 = {1, 0, 0};
    CHECK(in_row_space(a, v1));
    CHECK_FALSE(in_row_space(a, v2));
}
