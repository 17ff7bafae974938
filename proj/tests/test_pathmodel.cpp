#include <doctest.h>

#include <random>

#include "latpos/catalog.hpp"
#include "latpos/pathmodel.hpp"

using namespace latpos;

namespace {

WeightScheme ones(int t, int ell) {
    WeightScheme s;
    s.t = t;
    s.ell = ell;
    for (int i = 0; i <= ell; ++i) s.a.push_back(WeightRule::constant(MultiPoly(1)));
    s.b = WeightRule::constant(MultiPoly(1));
    return s;
}

} // namespace

TEST_CASE("path enumeration ground cases") {
    WeightScheme delsq = ones(0, 1);
    auto paths00 = enumerate_paths(delsq, 0, 0);
    REQUIRE(paths00.size() == 1);
    CHECK(paths00[0].first.steps.empty());
    CHECK(paths00[0].second == MultiPoly(1));

    // east-north, north-east and the diagonal
    CHECK(enumerate_paths(delsq, 1, 1).size() == 3);

    WeightScheme pascal = ones(1, 0);
    CHECK(enumerate_paths(pascal, 2, 4).size() == 6);
}

TEST_CASE("oracle fixed values") {
    WeightScheme delsq = ones(0, 1);
    CHECK(matrix_entry_oracle(delsq, 0, 0) == MultiPoly(1));
    CHECK(matrix_entry_oracle(delsq, 2, 2) == MultiPoly(13));
    CHECK(matrix_entry_oracle(delsq, 3, 3) == MultiPoly(63));
}

TEST_CASE("oracle on the symbolic recursive family") {
    auto [brenti, orient] = catalog_scheme("brenti", {{"t", "0"}});
    CHECK(orient == Orientation::M);
    MultiPoly expect = MultiPoly::parse("z1*x1+y1+x1*z0");
    CHECK(matrix_entry_oracle(brenti, 1, 1) == expect);
}

TEST_CASE("enumeration cap") {
    WeightScheme delsq = ones(0, 1);
    CHECK_THROWS_AS(enumerate_paths(delsq, 6, 6, 100), Error);
}

TEST_CASE("rec1 fixed entries") {
    WeightScheme pascal = ones(1, 0);
    TriangleTruncation tri = build_matrix_rec1(pascal, 6, 6);
    CHECK(tri.entries.at(4, 2) == MultiPoly(6));
    CHECK(tri.entries.at(0, 1).is_zero());

    WeightScheme deltri = ones(1, 1);
    TriangleTruncation d = build_matrix_rec1(deltri, 6, 6);
    CHECK(d.entries.at(4, 2) == MultiPoly(13));
    CHECK(d.entries.at(0, 1).is_zero());
}

TEST_CASE("rec2 fixed entries") {
    auto [brenti, _] = catalog_scheme("brenti", {{"t", "0"}});
    TriangleTruncation tri = build_matrix_rec2(brenti, 4, 4);
    CHECK(tri.entries.at(3, 0) == MultiPoly::parse("x1*x2*x3"));
    CHECK(tri.entries.at(1, 1) == MultiPoly::parse("z1*x1+y1+x1*z0"));

    WeightScheme deltri = ones(1, 1);
    CHECK(build_matrix_rec2(deltri, 6, 6).entries.at(4, 2) == MultiPoly(13));
}

TEST_CASE("routes agree: rec1 = rec2 = oracle") {
    std::vector<WeightScheme> battery;
    battery.push_back(ones(0, 0));
    battery.push_back(ones(1, 0));
    battery.push_back(ones(0, 1));
    battery.push_back(ones(1, 1));
    battery.push_back(catalog_scheme("brenti", {{"t", "0"}}).first);
    battery.push_back(catalog_scheme("brenti", {{"t", "2"}}).first);
    battery.push_back(catalog_scheme("stirling1").first);
    battery.push_back(catalog_scheme("jacobi_stirling1").first);
    {
        WeightScheme s = ones(2, 2); // wider band, larger t
        battery.push_back(s);
    }

    for (const auto& s : battery) {
        const int N = 7, K = 5;
        TriangleTruncation r1 = build_matrix_rec1(s, N, K);
        TriangleTruncation r2 = build_matrix_rec2(s, N, K);
        CHECK(r1.entries == r2.entries);
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= K; ++k) {
                if (n + k > 9) continue;
                CHECK(r1.entries.at(n, k) == matrix_entry_oracle(s, n, k));
            }
    }
}

TEST_CASE("every truncation entry has nonnegative coefficients") {
    auto [brenti, _] = catalog_scheme("brenti", {{"t", "1"}});
    TriangleTruncation tri = build_matrix_rec1(brenti, 6, 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) CHECK(is_coeff_nonnegative(tri.entries.at(n, k)));
}

TEST_CASE("transpose engine") {
    auto [st2, orient] = catalog_scheme("stirling2");
    CHECK(orient == Orientation::T);
    TriangleTruncation tri = build_transpose_rec(st2, 6, 6);
    CHECK(tri.entries.at(0, 0) == MultiPoly(1));
    CHECK(tri.entries.at(4, 2) == MultiPoly(7));  // set partitions of [4] into 2 blocks
    CHECK(tri.entries.at(5, 3) == MultiPoly(25));

    // transpose relation under the index swap: same tables read as a_k, b_k
    WeightScheme delsq = ones(0, 1);
    TriangleTruncation m = build_matrix_rec1(delsq, 6, 6);
    TriangleTruncation t = build_transpose_rec(delsq, 6, 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) CHECK(t.entries.at(n, k) == m.entries.at(k, n));
    CHECK(t.entries.at(2, 3) == m.entries.at(3, 2));
}

TEST_CASE("transpose relation for a varying-weight scheme") {
    // a_n^(0) = n+1 read as a_k^(0) = k+1 under the swap
    WeightScheme s;
    s.t = 1;
    s.ell = 0;
    s.a.push_back(WeightRule::poly_in_index(MultiPoly::parse("n+1")));
    s.b = WeightRule::poly_in_index(MultiPoly::parse("n"));
    TriangleTruncation m = build_matrix_rec1(s, 7, 7);
    TriangleTruncation t = build_transpose_rec(s, 7, 7);
    CHECK(t.entries == m.entries.transposed());
}

TEST_CASE("weight nonnegativity is enforced") {
    WeightScheme bad;
    bad.t = 1;
    bad.ell = 0;
    bad.a.push_back(WeightRule::constant(MultiPoly::parse("x-1")));
    bad.b = WeightRule::constant(MultiPoly(1));
    CHECK_THROWS_AS(build_matrix_rec1(bad, 3, 3), Error);
}
