#include <doctest.h>

#include "latpos/riordan.hpp"
#include "latpos/pathmodel.hpp"

using namespace latpos;

namespace {

ConstantScheme pascal_triangle_cs() {
    return ConstantScheme::from_factors(1, {MultiPoly(0)}, {MultiPoly(1)}, MultiPoly(1));
}

ConstantScheme delannoy_triangle_cs() {
    return ConstantScheme::from_factors(1, {MultiPoly(1)}, {MultiPoly(1)}, MultiPoly(1));
}

ConstantScheme pascal_square_cs() {
    ConstantScheme cs;
    cs.t = 0;
    cs.ell = 0;
    cs.a = {MultiPoly(1)};
    cs.gamma = MultiPoly(1);
    cs.factors = std::make_pair(std::vector<MultiPoly>{}, std::vector<MultiPoly>{});
    return cs;
}

ConstantScheme gen_delannoy_cs(MultiPoly a, MultiPoly b, MultiPoly c) {
    return ConstantScheme::from_factors(1, {std::move(c)}, {std::move(a)}, std::move(b));
}

} // namespace

TEST_CASE("closed-form array entries") {
    RiordanSpec pascal = riordan_from_scheme(pascal_triangle_cs(), 8);
    CHECK(pascal.kind == RiordanSpec::Kind::proper);
    CHECK(riordan_entry(pascal, 4, 2) == MultiPoly(6));
    CHECK(riordan_entry(pascal, 0, 0) == MultiPoly(1));

    RiordanSpec delannoy = riordan_from_scheme(delannoy_triangle_cs(), 8);
    CHECK(riordan_entry(delannoy, 4, 2) == MultiPoly(13));

    RiordanSpec square = riordan_from_scheme(pascal_square_cs(), 8);
    CHECK(square.kind == RiordanSpec::Kind::improper);
    CHECK(riordan_entry(square, 3, 4) == MultiPoly(35)); // C(7,4)
}

TEST_CASE("generalized Delannoy closed form g and f") {
    MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b"), c = MultiPoly::var("c");
    RiordanSpec spec = riordan_from_scheme(gen_delannoy_cs(a, b, c), 6);
    // g = 1/(1-bz): coefficients b^n
    CHECK(spec.g.coeff(0) == MultiPoly(1));
    CHECK(spec.g.coeff(2) == b * b);
    // f = z(a+cz)/(1-bz): f_0 = 0, f_1 = a, f_2 = c + ab
    CHECK(spec.f.coeff(0).is_zero());
    CHECK(spec.f.coeff(1) == a);
    CHECK(spec.f.coeff(2) == c + a * b);
    CHECK(spec.kind == RiordanSpec::Kind::proper);
}

TEST_CASE("explicit sum route") {
    ConstantScheme cs = delannoy_triangle_cs();
    // (4,2): the three contributing splits give 6 + 6 + 1
    CHECK(explicit_entry(cs, 4, 2) == MultiPoly(13));
    CHECK(explicit_entry(cs, 1, 2).is_zero()); // n < t k
    ConstantScheme nofac;
    nofac.t = 1;
    nofac.ell = 0;
    nofac.a = {MultiPoly(1)};
    nofac.gamma = MultiPoly(1);
    CHECK_THROWS_AS(explicit_entry(nofac, 2, 1), Error);
}

TEST_CASE("route agreement: series = explicit sum = recurrence") {
    std::vector<ConstantScheme> battery{pascal_triangle_cs(), delannoy_triangle_cs(),
                                        gen_delannoy_cs(MultiPoly::var("a"), MultiPoly::var("b"),
                                                        MultiPoly::var("c"))};
    // an ell = 3, t = 2 symbolic stress case
    battery.push_back(ConstantScheme::from_factors(
        2, {MultiPoly::var("a1"), MultiPoly::var("a2"), MultiPoly::var("a3")},
        {MultiPoly::var("c1"), MultiPoly::var("c2"), MultiPoly::var("c3")}, MultiPoly::var("g")));

    for (const auto& cs : battery) {
        const int N = 8;
        RiordanSpec spec = riordan_from_scheme(cs, N);
        TriangleTruncation tri = build_matrix_rec1(cs.to_weight_scheme(), N, N);
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= N; ++k) {
                CHECK(riordan_entry(spec, n, k) == tri.entries.at(n, k));
                CHECK(explicit_entry(cs, n, k) == tri.entries.at(n, k));
            }
    }
}

TEST_CASE("proper arrays are lower triangular, improper are full") {
    RiordanSpec pas = riordan_from_scheme(pascal_triangle_cs(), 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = n + 1; k <= 6; ++k) CHECK(riordan_entry(pas, n, k).is_zero());
    RiordanSpec sq = riordan_from_scheme(pascal_square_cs(), 6);
    CHECK_FALSE(riordan_entry(sq, 0, 5).is_zero());
}

TEST_CASE("bivariate generating function matches the truncation") {
    CHECK(bivariate_gf_check(pascal_triangle_cs(), 6, 6));
    CHECK(bivariate_gf_check(delannoy_triangle_cs(), 8, 4));
    CHECK(bivariate_gf_check(gen_delannoy_cs(MultiPoly::var("a"), MultiPoly::var("b"),
                                             MultiPoly::var("c")),
                             6, 4));
    // gamma = 0, ell = 0, t = 1: the shift matrix with powers of a_0
    ConstantScheme shift;
    shift.t = 1;
    shift.ell = 0;
    shift.a = {MultiPoly::var("u")};
    shift.gamma = MultiPoly(0);
    CHECK(bivariate_gf_check(shift, 5, 5));
}

TEST_CASE("column generating functions") {
    ConstantScheme cs = pascal_triangle_cs();
    PowerSeries h0 = column_gf(cs, 0, 6);
    for (unsigned i = 0; i <= 6; ++i) CHECK(h0.coeff(i) == MultiPoly(1));
    PowerSeries h2 = column_gf(cs, 2, 6);
    CHECK(h2.coeff(4) == MultiPoly(6));

    // row sums of the generalized Delannoy triangle: 1/(1-(a+b)z-cz^2)
    MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b"), c = MultiPoly::var("c");
    ConstantScheme gd = gen_delannoy_cs(a, b, c);
    const unsigned N = 7;
    PowerSeries sum(N);
    for (int k = 0; k <= static_cast<int>(N); ++k) sum = sum + column_gf(gd, k, N);
    PowerSeries phi = (PowerSeries::constant(MultiPoly(1), N) -
                       PowerSeries::monomial(a + b, 1, N) -
                       PowerSeries::monomial(c, 2, N))
                          .invert();
    CHECK(sum == phi);
}
