#include <doctest.h>

#include <functional>

#include "latpos/catalog.hpp"
#include "latpos/riordan.hpp"
#include "latpos/seqprops.hpp"

using namespace latpos;

namespace {

// Literal transcriptions of the defining recurrences, used only here as a
// second route for the catalog builders.
using Rec = std::function<MultiPoly(int, int)>;

PolyMatrix fill(int N, const Rec& rec) {
    PolyMatrix m(N + 1, N + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= N; ++k) m.at(n, k) = rec(n, k);
    return m;
}

} // namespace

TEST_CASE("pascal and delannoy triangles match their recurrences") {
    const int N = 8;
    std::function<MultiPoly(int, int)> pasc = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0 || k > n) return MultiPoly(0);
        if (n == 0 && k == 0) return MultiPoly(1);
        return pasc(n - 1, k - 1) + pasc(n - 1, k);
    };
    auto [ps, _1] = catalog_scheme("pascal_triangle");
    CHECK(build_matrix_rec1(ps, N, N).entries == fill(N, pasc));

    std::function<MultiPoly(int, int)> del = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0 || k > n) return MultiPoly(0);
        if (n == 0 && k == 0) return MultiPoly(1);
        return del(n - 2, k - 1) + del(n - 1, k - 1) + del(n - 1, k);
    };
    auto [dt, _2] = catalog_scheme("delannoy_triangle");
    CHECK(build_matrix_rec1(dt, N, N).entries == fill(N, del));
}

TEST_CASE("squares match their recurrences") {
    const int N = 7;
    std::function<MultiPoly(int, int)> psq = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0) return MultiPoly(0);
        if (n == 0 && k == 0) return MultiPoly(1);
        return psq(n, k - 1) + psq(n - 1, k);
    };
    auto [s1, _1] = catalog_scheme("pascal_square");
    CHECK(build_matrix_rec1(s1, N, N).entries == fill(N, psq));

    std::function<MultiPoly(int, int)> dsq = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0) return MultiPoly(0);
        if (n == 0 && k == 0) return MultiPoly(1);
        return dsq(n, k - 1) + dsq(n - 1, k - 1) + dsq(n - 1, k);
    };
    auto [s2, _2] = catalog_scheme("delannoy_square");
    CHECK(build_matrix_rec1(s2, N, N).entries == fill(N, dsq));
}

TEST_CASE("recursive family matches its defining recurrence") {
    for (int t : {0, 1, 2}) {
        std::function<MultiPoly(int, int)> bre = [&](int n, int k) -> MultiPoly {
            if (n < 0 || k < 0) return MultiPoly(0);
            if (n == 0 && k == 0) return MultiPoly(1);
            auto zv = [](int i) { return MultiPoly::var("z" + std::to_string(i)); };
            auto yv = [](int i) { return MultiPoly::var("y" + std::to_string(i)); };
            auto xv = [](int i) { return MultiPoly::var("x" + std::to_string(i)); };
            return zv(n) * bre(n - t, k - 1) + yv(n) * bre(n - 1 - t, k - 1) +
                   xv(n) * bre(n - 1, k);
        };
        auto [s, _] = catalog_scheme("brenti", {{"t", std::to_string(t)}});
        CHECK(build_matrix_rec1(s, 5, 5).entries == fill(5, bre));
    }
}

TEST_CASE("delannoy-like identifications") {
    const int N = 7;
    auto [d10, _1] = catalog_scheme("delannoy_like", {{"e", "1"}, {"h", "0"}});
    auto [pas, _2] = catalog_scheme("pascal_triangle");
    CHECK(build_matrix_rec1(d10, N, N).entries == build_matrix_rec1(pas, N, N).entries);

    auto [d11, _3] = catalog_scheme("delannoy_like", {{"e", "1"}, {"h", "1"}});
    auto [dt, _4] = catalog_scheme("delannoy_triangle");
    CHECK(build_matrix_rec1(d11, N, N).entries == build_matrix_rec1(dt, N, N).entries);

    // symbolic e, h against the literal recurrence with d(1,0) = 1
    auto [deh, _5] = catalog_scheme("delannoy_like");
    MultiPoly e = MultiPoly::var("e"), h = MultiPoly::var("h");
    std::function<MultiPoly(int, int)> rec = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0 || k > n) return MultiPoly(0);
        if (n == 0 && k == 0) return MultiPoly(1);
        if (n == 1 && k == 0) return MultiPoly(1);
        return rec(n - 1, k - 1) + h * rec(n - 2, k - 1) + e * rec(n - 1, k);
    };
    CHECK(build_matrix_rec1(deh, 6, 6).entries == fill(6, rec));
}

TEST_CASE("stirling-like triangles") {
    auto [s1, _1] = catalog_scheme("stirling1");
    TriangleTruncation c = build_matrix_rec1(s1, 6, 6);
    CHECK(c.entries.at(4, 2) == MultiPoly(11));
    CHECK(c.entries.at(5, 1) == MultiPoly(24)); // (n-1)!

    auto [ls1, _2] = catalog_scheme("legendre_stirling1");
    TriangleTruncation ps = build_matrix_rec1(ls1, 5, 5);
    CHECK(ps.entries.at(3, 0).is_zero());
    CHECK(ps.entries.at(3, 1) == MultiPoly(12));
    CHECK(ps.entries.at(3, 2) == MultiPoly(8));
    CHECK(ps.entries.at(3, 3) == MultiPoly(1));

    auto [jc, _3] = catalog_scheme("jacobi_stirling1");
    TriangleTruncation j = build_matrix_rec1(jc, 5, 5);
    CHECK(j.entries.at(3, 2) == MultiPoly::parse("3*z+5"));

    // z = 1 turns (n-1)(n-1+z) into n(n-1): the Legendre-Stirling numbers
    auto [jc1, _4] = catalog_scheme("jacobi_stirling1", {{"z", "1"}});
    CHECK(build_matrix_rec1(jc1, 5, 5).entries == ps.entries);
}

TEST_CASE("second-kind triangles via the column-recursive engine") {
    auto [s2, o] = catalog_scheme("stirling2");
    REQUIRE(o == Orientation::T);
    TriangleTruncation t = build_transpose_rec(s2, 6, 6);
    std::function<MultiPoly(int, int)> rec = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0) return MultiPoly(0);
        if (n == 0) return k == 0 ? MultiPoly(1) : MultiPoly(0);
        return rec(n - 1, k - 1) + MultiPoly(k) * rec(n - 1, k);
    };
    CHECK(t.entries == fill(6, rec));

    // gen_jacobi_stirling2 with a = k(k+z), b = 1 gives the second-kind family
    auto [js, o2] = catalog_scheme("gen_jacobi_stirling2",
                                   {{"a1", "1"}, {"a2", "2"}, {"a3", "0"},
                                    {"b1", "0"}, {"b2", "0"}, {"b3", "1"}});
    REQUIRE(o2 == Orientation::T);
    TriangleTruncation jt = build_transpose_rec(js, 5, 5);
    std::function<MultiPoly(int, int)> jrec = [&](int n, int k) -> MultiPoly {
        if (n < 0 || k < 0) return MultiPoly(0);
        if (n == 0) return k == 0 ? MultiPoly(1) : MultiPoly(0);
        return jrec(n - 1, k - 1) + MultiPoly(k) * MultiPoly(k + 2) * jrec(n - 1, k);
    };
    CHECK(jt.entries == fill(5, jrec));
}

TEST_CASE("first and second kind triangles are orthogonal") {
    for (long z : {0L, 1L, 2L}) {
        auto [jc, _1] = catalog_scheme("jacobi_stirling1", {{"z", std::to_string(z)}});
        TriangleTruncation first = build_matrix_rec1(jc, 6, 6);
        auto [js, _2] = catalog_scheme(
            "gen_jacobi_stirling2",
            {{"a1", "1"}, {"a2", std::to_string(z)}, {"a3", "0"},
             {"b1", "0"}, {"b2", "0"}, {"b3", "1"}});
        TriangleTruncation second = build_transpose_rec(js, 6, 6);
        for (int i = 0; i <= 5; ++i)
            for (int j = 0; j <= 5; ++j) {
                MultiPoly acc;
                for (int k = 0; k <= 6; ++k) {
                    MultiPoly term = second.entries.at(i, k) * first.entries.at(k, j);
                    if ((k + j) % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                CHECK(acc == (i == j ? MultiPoly(1) : MultiPoly(0)));
            }
    }
}

TEST_CASE("closed form for the weighted square lattice count") {
    auto [gd, _] = catalog_scheme("generalized_delannoy");
    TriangleTruncation tri = build_matrix_rec1(gd, 10, 10);
    ConstantScheme cs = ConstantScheme::from_factors(
        1, {MultiPoly::var("c")}, {MultiPoly::var("a")}, MultiPoly::var("b"));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; n + k <= 10; ++k)
            CHECK(explicit_entry(cs, n, k) == tri.entries.at(n, k));

    // triangle coordinates of the double-binomial sum
    MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b"), c = MultiPoly::var("c");
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            MultiPoly sum;
            for (int d = 0; d <= k; ++d)
                sum += binomial(n - d, k) * binomial(k, d) * pow(a, static_cast<unsigned>(k - d)) *
                       pow(b, static_cast<unsigned>(n - k - d)) * pow(c, static_cast<unsigned>(d));
            CHECK(tri.entries.at(n, k) == sum);
        }
}

TEST_CASE("catalog registry") {
    CHECK(catalog_list().size() == 12);
    CHECK_THROWS_AS(catalog_scheme("no_such_triangle"), Error);
    CHECK_THROWS_AS(catalog_scheme("brenti", {{"t", "-1"}}), Error);
    std::string j = catalog_json();
    CHECK(j.find("stirling2") != std::string::npos);
    CHECK(j.find("\"orientation\":\"T\"") != std::string::npos);
}
