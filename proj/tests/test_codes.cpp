#include <doctest.h>

#include "qtpc/codes.hpp"

using namespace qtpc;

namespace {

const GfMatrix& hamming7_h() {
    static GfMatrix h = GfMatrix::from_rows(Field::get(1), {{0, 0, 0, 1, 1, 1, 1},
                                                            {0, 1, 1, 0, 0, 1, 1},
                                                            {1, 0, 1, 0, 1, 0, 1}});
    return h;
}

}  // namespace

TEST_CASE("from_parity, generator, encode, syndrome") {
    const Field& f2 = Field::get(1);
    auto rep2 = LinearCode::from_parity(GfMatrix::from_rows(f2, {{1, 1}}));
    CHECK(rep2.n() == 2);
    CHECK(rep2.k() == 1);
    CHECK(rep2.generator() == GfMatrix::from_rows(f2, {{1, 1}}));

    auto ham = LinearCode::from_parity(hamming7_h());
    CHECK(ham.k() == 4);
    CHECK(matmul(ham.generator(), transpose(ham.h())).is_zero());
    // syndrome of a weight-1 error is the matching column of H
    for (int i = 0; i < 7; ++i) {
        std::vector<gf_elem> e(7, 0);
        e[i] = 1;
        auto s = ham.syndrome(e);
        for (int r = 0; r < 3; ++r) CHECK(s[r] == hamming7_h().at(r, i));
    }

    auto rep3 = LinearCode::from_parity(
        GfMatrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
    std::vector<gf_elem> msg = {1};
    CHECK(rep3.encode(msg) == std::vector<gf_elem>{1, 1, 1});

    // zero-dimensional code: encode rejects nonempty messages
    auto zero = LinearCode::from_parity(GfMatrix::identity(f2, 3));
    CHECK(zero.k() == 0);
    CHECK_THROWS_AS(zero.encode(msg), std::invalid_argument);
    CHECK(zero.encode({}) == std::vector<gf_elem>{0, 0, 0});
}

TEST_CASE("duals") {
    const Field& f2 = Field::get(1);
    auto full = LinearCode::from_parity(GfMatrix(f2, 0, 4));
    CHECK(full.k() == 4);
    CHECK(dual(full).k() == 0);

    auto ham = LinearCode::from_parity(hamming7_h());
    auto simplex = dual(ham);
    CHECK(simplex.k() == 3);
    CHECK(min_distance(simplex).value == 4);
    CHECK(min_distance(simplex).exact);
    CHECK(dual(dual(ham)) == ham);
}

TEST_CASE("dual containment checks") {
    const Field& f2 = Field::get(1);
    auto rep2 = LinearCode::from_parity(GfMatrix::from_rows(f2, {{1, 1}}));
    CHECK(is_dual_containing(rep2));
    CHECK(is_dual_containing(LinearCode::from_parity(hamming7_h())));
    auto rep3 = LinearCode::from_parity(
        GfMatrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
    CHECK_FALSE(is_dual_containing(rep3));

    // membership route: every dual generator row is a codeword
    auto ham = LinearCode::from_parity(hamming7_h());
    auto hd = dual(ham);
    const GfMatrix& gd = hd.generator();
    for (int r = 0; r < gd.rows(); ++r) CHECK(ham.contains(gd.row(r)));
}

TEST_CASE("hermitian dual of the [5,3,3] code") {
    const Field& f4 = Field::get(2);
    auto h = GfMatrix::from_rows(
        f4, {{1, 1, 1, 1, 0}, {gf4_omega, gf4_omega2, 1, 0, 1}});
    auto c = LinearCode::from_parity(h);
    CHECK(c.k() == 3);
    CHECK(is_hermitian_dual_containing(c));
    auto hd = hermitian_dual(c);
    CHECK(hd.k() == 2);
    // containment: every generator row of the Hermitian dual lies in C
    const GfMatrix& g = hd.generator();
    for (int r = 0; r < g.rows(); ++r) CHECK(c.contains(g.row(r)));
}

TEST_CASE("trace-Hermitian self-orthogonality matches Hermitian for GF(4)-linear") {
    const Field& f4 = Field::get(2);
    auto h533 = GfMatrix::from_rows(
        f4, {{1, 1, 1, 1, 0}, {gf4_omega, gf4_omega2, 1, 0, 1}});
    // D = Hermitian dual of the [5,3,3] code is Hermitian self-orthogonal
    auto d = hermitian_dual(LinearCode::from_parity(h533));
    CHECK(is_trace_hermitian_self_orthogonal(d));
    // a random non-self-orthogonal code fails
    auto bad = LinearCode::from_parity(GfMatrix::from_rows(f4, {{1, 0, 0}}));
    CHECK_FALSE(is_trace_hermitian_self_orthogonal(dual(bad)));
}

TEST_CASE("min_distance") {
    const Field& f2 = Field::get(1);
    GfMatrix h5(f2, 4, 5);
    for (int i = 0; i < 4; ++i) {
        h5.set(i, i, 1);
        h5.set(i, i + 1, 1);
    }
    CHECK(min_distance(LinearCode::from_parity(h5)).value == 5);
    CHECK(min_distance(LinearCode::from_parity(hamming7_h())).value == 3);

    // column-dependency route gives the same answer with enumeration disabled
    DistanceBudget tight;
    tight.max_enumeration = 1;
    auto d = min_distance(LinearCode::from_parity(hamming7_h()), tight);
    CHECK(d.value == 3);
    CHECK(d.exact);

    // budget exhaustion yields a lower bound, never a false exact claim
    tight.max_column_weight = 2;
    auto lb = min_distance(LinearCode::from_parity(hamming7_h()), tight);
    CHECK_FALSE(lb.exact);
    CHECK(lb.value == 3);
}

TEST_CASE("min_weight_difference") {
    const Field& f2 = Field::get(1);
    auto rep2 = LinearCode::from_parity(GfMatrix::from_rows(f2, {{1, 1}}));
    auto zero2 = LinearCode::from_parity(GfMatrix::identity(f2, 2));
    CHECK(min_weight_difference(rep2, zero2) == 2);

    auto ham = LinearCode::from_parity(hamming7_h());
    CHECK(min_weight_difference(ham, dual(ham)) == 3);

    CHECK_FALSE(min_weight_difference(ham, ham).has_value());

    // non-subcode input is rejected
    auto full = LinearCode::from_parity(GfMatrix(f2, 0, 7));
    CHECK_THROWS_AS(min_weight_difference(ham, full), std::invalid_argument);
}

TEST_CASE("min_distance agrees with enumeration wherever both run") {
    const Field& f4 = Field::get(2);
    auto h = GfMatrix::from_rows(
        f4, {{1, 1, 1, 1, 0}, {gf4_omega, gf4_omega2, 1, 0, 1}});
    auto c = LinearCode::from_parity(h);
    auto by_enum = min_distance(c);
    DistanceBudget cols_only;
    cols_only.max_enumeration = 1;
    auto by_cols = min_distance(c, cols_only);
    CHECK(by_enum.value == 3);
    CHECK(by_cols.value == 3);
    CHECK(by_cols.exact);
}
