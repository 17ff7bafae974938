#include <doctest.h>

#include "latpos/catalog.hpp"
#include "latpos/structural.hpp"

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

TEST_CASE("banded weight matrix") {
    auto [brenti, _] = catalog_scheme("brenti", {{"t", "0"}});
    PolyMatrix a = build_A_matrix(brenti, 3);
    CHECK(a.at(0, 0) == MultiPoly::parse("z0"));
    CHECK(a.at(1, 0) == MultiPoly::parse("y1"));
    CHECK(a.at(1, 1) == MultiPoly::parse("z1"));
    CHECK(a.at(0, 1).is_zero());
    CHECK(a.at(2, 0).is_zero()); // below the band for ell = 1

    // constant weights give a Toeplitz band
    WeightScheme c = ones(0, 2);
    PolyMatrix ac = build_A_matrix(c, 4);
    CHECK(ac == toeplitz({MultiPoly(1), MultiPoly(1), MultiPoly(1)}, 4));
}

TEST_CASE("a tridiagonal band with zero middle weight is not totally positive") {
    WeightScheme s;
    s.t = 0;
    s.ell = 2;
    s.a.push_back(WeightRule::constant(MultiPoly(1)));
    s.a.push_back(WeightRule::constant(MultiPoly(0)));
    s.a.push_back(WeightRule::constant(MultiPoly(1)));
    s.b = WeightRule::constant(MultiPoly(1));
    TPReport rep = is_tp_order(build_A_matrix(s, 4), 2);
    CHECK_FALSE(rep.passed);
    CHECK(*rep.witness_value == MultiPoly(-1));
}

TEST_CASE("production matrix entries") {
    auto [brenti, _] = catalog_scheme("brenti", {{"t", "0"}});
    PolyMatrix p = build_P_matrix(brenti, 4);
    CHECK(p.at(0, 0) == MultiPoly(1));
    CHECK(p.at(1, 0) == MultiPoly::parse("x1"));
    CHECK(p.at(1, 1) == MultiPoly::parse("y1+x1*z0"));
    CHECK(p.at(2, 2) == MultiPoly::parse("y2+x2*z1"));
    CHECK(p.at(0, 1) == MultiPoly::parse("z0"));
    CHECK(p.at(0, 2).is_zero());
    CHECK(p.at(3, 0) == MultiPoly::parse("x1*x2*x3"));
}

TEST_CASE("production matrix for a wider band") {
    WeightScheme s = ones(0, 2);
    PolyMatrix p = build_P_matrix(s, 5);
    // row 2, column 1 = a_2^(2) + b_2 a_1^(1) + b_2 b_1 a_0^(0) = 3
    CHECK(p.at(2, 1) == MultiPoly(3));
    // deep rows stabilize: row 4, column 1 = sum of 3 banded products
    CHECK(p.at(4, 1) == MultiPoly(3));
}

TEST_CASE("connection identity") {
    CHECK(verify_connection(ones(1, 1), 6));
    CHECK(verify_connection(ones(0, 2), 6));
    CHECK(verify_connection(catalog_scheme("brenti", {{"t", "0"}}).first, 5));
    CHECK(verify_connection(catalog_scheme("brenti", {{"t", "1"}}).first, 5));
    CHECK(verify_connection(catalog_scheme("stirling1").first, 6));
    CHECK(verify_connection(catalog_scheme("jacobi_stirling1").first, 5));
}

TEST_CASE("decomposition identity") {
    CHECK(verify_decomposition(ones(0, 0), 3, 6)); // columns route, t = 0
    CHECK(verify_decomposition(ones(0, 1), 4, 6));
    CHECK(verify_decomposition(catalog_scheme("brenti", {{"t", "0"}}).first, 3, 5));
    CHECK(verify_decomposition(ones(1, 1), 0, 6)); // row route, t = 1
    CHECK(verify_decomposition(ones(2, 2), 0, 6));
    CHECK(verify_decomposition(catalog_scheme("stirling1").first, 0, 6));

    // trivial scheme: only the diagonal weight survives
    WeightScheme diag;
    diag.t = 0;
    diag.ell = 0;
    diag.a.push_back(WeightRule::constant(MultiPoly::var("u")));
    diag.b = WeightRule::constant(MultiPoly(0));
    CHECK(verify_decomposition(diag, 2, 5));
}

TEST_CASE("factor parameters reproduce the band weights") {
    // alpha = a^(0), lambda = 1, mu = 0, beta = a^(1): the ell = 1 embedding
    WeightRule a0 = WeightRule::indexed("p");
    WeightRule a1 = WeightRule::indexed("q");
    WeightScheme s = tridiag_factor_params(a0, a1, WeightRule::constant(MultiPoly(1)),
                                           WeightRule::constant(MultiPoly(0)), a1, 1);
    CHECK(s.a_weight(2, 0) == MultiPoly::parse("p2"));
    CHECK(s.a_weight(2, 1) == MultiPoly::parse("q2"));
    CHECK(s.a_weight(3, 2).is_zero());

    // the first recipe: alpha_n = a_n^(0), lambda = mu = 1, beta_1 = 0, beta_n = a_n^(2)
    WeightRule beta = WeightRule::fn(
        [](int n) { return n < 2 ? MultiPoly(0) : MultiPoly::var("r" + std::to_string(n)); },
        "0,0,r2,r3,...");
    WeightScheme s2 = tridiag_factor_params(a0, beta, WeightRule::constant(MultiPoly(1)),
                                            WeightRule::constant(MultiPoly(1)), a1, 1);
    CHECK(s2.a_weight(3, 1) == MultiPoly::parse("p3+r3")); // a^(0) + a^(2)
    CHECK(s2.a_weight(3, 2) == MultiPoly::parse("r3"));

    // all-zero mu and beta keep only the bottom band
    WeightScheme s3 = tridiag_factor_params(a0, WeightRule::constant(MultiPoly(0)),
                                            WeightRule::constant(MultiPoly(1)),
                                            WeightRule::constant(MultiPoly(0)), a1, 0);
    CHECK(s3.a_weight(4, 1).is_zero());
    CHECK(s3.a_weight(4, 2).is_zero());
}

TEST_CASE("bidiagonal factorization of the band") {
    // ell = 1: single factor
    std::vector<MultiPoly> al{MultiPoly::parse("c")}, be{MultiPoly::parse("a")};
    CHECK(verify_W_factorization(al, be, 4));

    // ell = 2 symbolic: diagonal entry b1*b2, subdiagonal a1*b2 + a2*b1
    std::vector<MultiPoly> al2{MultiPoly::parse("a1"), MultiPoly::parse("a2")};
    std::vector<MultiPoly> be2{MultiPoly::parse("b1"), MultiPoly::parse("b2")};
    CHECK(verify_W_factorization(al2, be2, 5));
    auto coeff = band_coefficients(al2, be2);
    CHECK(coeff[0] == MultiPoly::parse("b1*b2"));
    CHECK(coeff[1] == MultiPoly::parse("a1*b2+a2*b1"));
    CHECK(coeff[2] == MultiPoly::parse("a1*a2"));

    // ell = 3 numeric
    std::vector<MultiPoly> al3{MultiPoly(2), MultiPoly(1), MultiPoly(3)};
    std::vector<MultiPoly> be3{MultiPoly(1), MultiPoly(4), MultiPoly(2)};
    CHECK(verify_W_factorization(al3, be3, 6));
}

TEST_CASE("band positivity transfers to the matrix") {
    // whenever the band passes at order r, the truncation passes at order r
    std::vector<WeightScheme> schemes{ones(1, 1), ones(0, 1),
                                      catalog_scheme("brenti", {{"t", "1"}}).first};
    for (const auto& s : schemes) {
        TPReport band = is_tp_order(build_A_matrix(s, 6), 3);
        REQUIRE(band.passed);
        TriangleTruncation tri = build_matrix_rec1(s, 5, 5);
        CHECK(is_tp_order(tri.entries, 3).passed);
    }
}
